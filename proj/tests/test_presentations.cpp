#include <stdexcept>

#include "doctest.h"
#include "gbr/algebra.hpp"
#include "gbr/groups.hpp"
#include "gbr/presentations.hpp"

using namespace gbr;

namespace {

AlgebraElement chain(const Algebra& A, std::initializer_list<const AlgebraElement*> xs) {
    AlgebraElement p = A.unit();
    for (const auto* x : xs) p = A.multiply(p, *x);
    return p;
}

void scaled_add(AlgebraElement& acc, const Rational& c, const AlgebraElement& x) {
    for (const auto& [w, v] : x) {
        acc[w] += c * v;
        if (acc[w] == 0) acc.erase(w);
    }
}

}  // namespace

TEST_CASE("four-generator tables present the dihedral algebras") {
    const std::map<int, size_t> counts = {{3, 12}, {4, 29}, {5, 14}, {6, 39}};
    for (int m : {3, 4, 5, 6}) {
        CAPTURE(m);
        Group G = Group::dihedral(m);
        Algebra A = build_algebra(G, generic_params(G));
        Presentation P = dihedral_presentation(m);
        CHECK(P.relations.size() == counts.at(m));
        auto asg = canonical_images(P, A);
        CHECK(check_assignment(P, asg, A).empty());
        CHECK(check_generation(asg, A));
    }
}

TEST_CASE("the coxeter-matrix list presents every verified real group") {
    for (int m : {3, 4, 5, 6}) {
        CAPTURE(m);
        Group G = Group::dihedral(m);
        Algebra A = build_algebra(G, generic_params(G));
        Presentation P = coxeter_presentation(G);
        auto asg = canonical_images(P, A);
        CHECK(check_assignment(P, asg, A).empty());
        CHECK(check_generation(asg, A));
    }
    Group S3 = Group::symmetric(3);
    Algebra A = build_algebra(S3, generic_params(S3));
    Presentation P = coxeter_presentation(S3);
    CHECK(P.relations.size() == 13);
    auto asg = canonical_images(P, A);
    CHECK(check_assignment(P, asg, A).empty());
    CHECK(check_generation(asg, A));
    CHECK_THROWS_AS(coxeter_presentation(Group::cyclotomic(2, 2)), std::invalid_argument);
}

TEST_CASE("diagram relation tables equal the coxeter lists at unit twist") {
    Presentation c3 = substitute_param(coxeter_presentation(Group::symmetric(3)), "mu", 1);
    Presentation c4 = substitute_param(coxeter_presentation(Group::symmetric(4)), "mu", 1);
    Presentation b3 = brauer_presentation(3), b4 = brauer_presentation(4);
    CHECK(b3.relations.size() == 13);
    CHECK(b4.relations.size() == 26);
    CHECK(same_relations(c3, b3));
    CHECK(same_relations(c4, b4));  // exercises the distant generator pairs
    CHECK_FALSE(same_relations(c3, b4));
    CHECK_FALSE(same_relations(c4, b3));
    // without the substitution the ideal rows keep their coefficient
    CHECK_FALSE(same_relations(coxeter_presentation(Group::symmetric(3)), b3));

    // comparison is insensitive to listing order, side swaps and reversal
    Presentation tw = b3;
    std::reverse(tw.relations.begin(), tw.relations.end());
    for (auto& r : tw.relations) {
        std::swap(r.lhs, r.rhs);
        for (auto* side : {&r.lhs, &r.rhs})
            for (auto& t : *side) std::reverse(t.word.begin(), t.word.end());
    }
    CHECK(same_relations(b3, tw));
    tw.relations[0].lhs[0].coeff = 2;
    CHECK_FALSE(same_relations(b3, tw));
}

TEST_CASE("wreath tables present the small cyclotomic algebras") {
    const std::map<int, size_t> counts = {{2, 29}, {3, 52}};
    for (int m : {2, 3}) {
        CAPTURE(m);
        Group G = Group::cyclotomic(m, 2);
        Algebra A = build_algebra(G, generic_params(G));
        Presentation P = cyclotomic_presentation(m, 2);
        CHECK(P.relations.size() == counts.at(m));
        auto asg = canonical_images(P, A);
        CHECK(check_assignment(P, asg, A).empty());
        CHECK(check_generation(asg, A));

        // the axis projector conjugates under S1, it does not commute with it
        CHECK(A.multiply(asg.at("S1"), asg.at("E0")) !=
              A.multiply(asg.at("E0"), asg.at("S1")));

        // E0 S1 E0 carries the identity term alongside the m-1 loop words
        auto e0s1e0 = chain(A, {&asg.at("E0"), &asg.at("S1"), &asg.at("E0")});
        Rational mu = A.params().mu.at("mu");
        AlgebraElement with_id, without_id;
        scaled_add(with_id, mu, asg.at("E0"));
        for (int i = 1; i < m; ++i) {
            AlgebraElement t = asg.at("S1");
            for (int k = 0; k < i; ++k) t = A.multiply(t, asg.at("S0"));
            t = A.multiply(t, asg.at("S1"));
            for (int k = 0; k < m - i; ++k) t = A.multiply(t, asg.at("S0"));
            t = A.multiply(t, asg.at("E0"));
            scaled_add(with_id, mu, t);
            scaled_add(without_id, mu, t);
        }
        CHECK(e0s1e0 == with_id);
        CHECK(e0s1e0 != without_id);
    }

    // frozen corrected row for m=2: E1 S0 E1 = mu1 (1 + S0 S1 S0 S1) E1
    Group G = Group::cyclotomic(2, 2);
    Algebra A = build_algebra(G, generic_params(G));
    auto asg = canonical_images(cyclotomic_presentation(2, 2), A);
    auto lhs = chain(A, {&asg.at("E1"), &asg.at("S0"), &asg.at("E1")});
    auto loop = chain(A, {&asg.at("S0"), &asg.at("S1"), &asg.at("S0"), &asg.at("S1"),
                          &asg.at("E1")});
    AlgebraElement rhs;
    scaled_add(rhs, A.params().mu.at("mu1"), asg.at("E1"));
    scaled_add(rhs, A.params().mu.at("mu1"), loop);
    CHECK(lhs == rhs);
}

TEST_CASE("the wreath table survives the dependence quotient at three strands") {
    Group G = Group::cyclotomic(2, 3);
    Algebra A = Algebra::quotiented(G, generic_params(G));
    REQUIRE(A.dim() == 264);
    Presentation P = cyclotomic_presentation(2, 3);
    CHECK(P.relations.size() == 120);
    auto asg = canonical_images(P, A);
    CHECK(check_assignment(P, asg, A).empty());
    CHECK(check_generation(asg, A));

    // mixed axis/swap projector products vanish for every conjugator, even
    // with disjoint supports: a hidden dependence, not a listed relation
    auto E0 = A.from_e(G.hyp_cyclo_axis(0));
    auto E1 = A.from_e(G.hyp_cyclo_offdiag(0, 1, 0));
    int zeros = 0;
    for (int g = 0; g < G.order(); ++g) {
        auto w = A.from_group(g);
        zeros += A.multiply(E0, A.multiply(w, E1)).empty();
        zeros += A.multiply(E1, A.multiply(w, E0)).empty();
    }
    CHECK(zeros == 2 * G.order());
    CHECK(A.multiply(A.from_e(G.hyp_cyclo_axis(2)), E1).empty());
}

TEST_CASE("conjugating words land every wall on its projector") {
    auto check_family = [](const Algebra& A) {
        const Group& G = A.group();
        auto fam = conjugate_e_family(A);
        REQUIRE((int)fam.size() == G.num_hyperplanes());
        for (const auto& [h, F] : fam) {
            CAPTURE(h);
            CHECK(F == A.from_e(h));
        }
    };
    for (int m : {2, 3}) {
        Group G = Group::cyclotomic(m, 2);
        check_family(build_algebra(G, generic_params(G)));
    }
    Group G = Group::cyclotomic(2, 3);
    check_family(Algebra::quotiented(G, generic_params(G)));

    Group D = Group::dihedral(4);
    Algebra B = build_algebra(D, generic_params(D));
    CHECK_THROWS_AS(conjugate_e_family(B), std::invalid_argument);
}

TEST_CASE("killing the projectors satisfies every relation but loses the ideal") {
    Group G = Group::symmetric(3);
    Algebra A = build_algebra(G, generic_params(G));
    Presentation P = coxeter_presentation(G);
    auto asg = canonical_images(P, A);
    asg["e1"] = AlgebraElement{};
    asg["e2"] = AlgebraElement{};
    CHECK(check_assignment(P, asg, A).empty());
    CHECK_FALSE(check_generation(asg, A));
}

TEST_CASE("relations render readably") {
    Presentation P = dihedral_presentation(3);
    bool saw_tau = false, saw_eq = false;
    for (const auto& r : P.relations) {
        std::string s = relation_str(r);
        saw_eq |= s.find(" = ") != std::string::npos;
        saw_tau |= s.find("tau") != std::string::npos;
    }
    CHECK(saw_eq);
    CHECK(saw_tau);
    Relation zero{"z", {{1, "", {"E0", "E1"}}}, {}};
    CHECK(relation_str(zero) == "z: E0 E1 = 0");
}
