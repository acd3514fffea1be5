#include <doctest.h>

#include <complex>
#include <set>

#include "gbr/groups.hpp"

using namespace gbr;
using cd = std::complex<double>;

namespace {

// Checks v2 is a unit-modulus complex multiple of v1.
bool proportional(const std::vector<cd>& v1, const std::vector<cd>& v2) {
    int k = -1;
    double best = 0;
    for (int i = 0; i < (int)v1.size(); ++i)
        if (std::abs(v1[i]) > best) { best = std::abs(v1[i]); k = i; }
    if (k < 0) return false;
    cd ratio = v2[k] / v1[k];
    if (std::abs(std::abs(ratio) - 1.0) > 1e-9) return false;
    for (int i = 0; i < (int)v1.size(); ++i)
        if (std::abs(v2[i] - ratio * v1[i]) > 1e-9) return false;
    return true;
}

void check_action_against_geometry(const Group& G) {
    for (int g = 0; g < G.order(); ++g) {
        auto M = G.element_matrix(g);
        for (int h = 0; h < G.num_hyperplanes(); ++h) {
            auto n = G.normal(h);
            std::vector<cd> img(G.ambient_dim(), cd(0));
            for (int i = 0; i < G.ambient_dim(); ++i)
                for (int j = 0; j < G.ambient_dim(); ++j) img[i] += M.at(i, j) * n[j];
            CHECK(proportional(G.normal(G.act(g, h)), img));
        }
    }
}

void check_full_associativity(const Group& G) {
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            for (int c = 0; c < G.order(); ++c)
                REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(Group::dihedral(5).order() == 10);
    CHECK(Group::symmetric(4).order() == 24);
    CHECK(Group::cyclotomic(3, 2).order() == 18);
    CHECK(Group::cyclotomic(2, 2).order() == 8);
}

TEST_CASE("multiplication tables are groups") {
    for (const Group& G : {Group::dihedral(4), Group::symmetric(3), Group::cyclotomic(2, 2)}) {
        check_full_associativity(G);
        for (int a = 0; a < G.order(); ++a) {
            CHECK(G.mul(a, G.identity()) == a);
            CHECK(G.mul(G.identity(), a) == a);
            CHECK(G.mul(a, G.inv(a)) == G.identity());
        }
    }
}

TEST_CASE("hyperplane action matches floating point geometry") {
    check_action_against_geometry(Group::dihedral(5));
    check_action_against_geometry(Group::dihedral(6));
    check_action_against_geometry(Group::symmetric(4));
    check_action_against_geometry(Group::cyclotomic(3, 2));
    check_action_against_geometry(Group::cyclotomic(2, 3));
}

TEST_CASE("dihedral r_set matches the closed form") {
    for (int m : {3, 5}) {
        Group G = Group::dihedral(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                int k = (i - j) % 2 == 0 ? ((i + j) / 2) % m : ((m + i + j) / 2) % m;
                const auto& rs = G.r_set(i, j);
                REQUIRE(rs.size() == 1);
                CHECK(rs[0] == G.dihedral_reflection(k));
            }
    }
    for (int m : {4, 6}) {
        Group G = Group::dihedral(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                const auto& rs = G.r_set(i, j);
                if ((i - j) % 2 != 0) {
                    CHECK(rs.empty());
                } else {
                    int k = ((i + j) / 2) % m, k2 = (k + m / 2) % m;
                    REQUIRE(rs.size() == 2);
                    std::set<int> got(rs.begin(), rs.end());
                    CHECK(got == std::set<int>{G.dihedral_reflection(k), G.dihedral_reflection(k2)});
                }
            }
    }
}

TEST_CASE("reflection conjugacy classes and hyperplane orbits") {
    Group odd = Group::dihedral(5);
    REQUIRE(odd.reflection_classes().size() == 1);
    CHECK(odd.reflection_classes()[0].name == "mu");
    CHECK(odd.reflection_classes()[0].members.size() == 5);
    REQUIRE(odd.hyperplane_orbits().size() == 1);
    CHECK(odd.hyperplane_orbits()[0].name == "tau");

    Group even = Group::dihedral(6);
    REQUIRE(even.reflection_classes().size() == 2);
    CHECK(even.reflection_classes()[0].name == "mu0");
    CHECK(even.reflection_classes()[1].name == "mu1");
    for (const auto& c : even.reflection_classes()) CHECK(c.members.size() == 3);
    REQUIRE(even.hyperplane_orbits().size() == 2);
    CHECK(even.hyperplane_orbits()[0].name == "tau0");

    Group cy = Group::cyclotomic(3, 2);
    REQUIRE(cy.reflection_classes().size() == 3);
    CHECK(cy.reflection_classes()[0].name == "mu");
    CHECK(cy.reflection_classes()[0].members.size() == 3);
    CHECK(cy.reflection_classes()[1].name == "mu1");
    CHECK(cy.reflection_classes()[1].members.size() == 2);
    CHECK(cy.reflection_classes()[2].name == "mu2");
    REQUIRE(cy.hyperplane_orbits().size() == 2);
    CHECK(cy.hyperplane_orbits()[0].name == "tau0");
    CHECK(cy.hyperplane_orbits()[0].members.size() == 2);
    CHECK(cy.hyperplane_orbits()[1].members.size() == 3);
}

TEST_CASE("edges partition hyperplane pairs") {
    Group s4 = Group::symmetric(4);
    CHECK(s4.edges().size() == 7);  // 4 triangles + 3 disjoint pairs
    int h12 = s4.hyp_symmetric(0, 1), h34 = s4.hyp_symmetric(2, 3), h13 = s4.hyp_symmetric(0, 2);
    CHECK(s4.pair_commutes(h12, h34));
    CHECK_FALSE(s4.pair_commutes(h12, h13));

    Group d5 = Group::dihedral(5);
    CHECK(d5.edges().size() == 1);
    CHECK(d5.edges()[0].size() == 5);

    Group g22 = Group::cyclotomic(2, 2);
    CHECK(g22.edges().size() == 1);
    CHECK(g22.edges()[0].size() == 4);

    Group g23 = Group::cyclotomic(2, 3);
    // three big edges, 4 twist-compatible triples... enumerated: m^2 per triangle
    for (const auto& e : g23.edges()) {
        CHECK(e.size() >= 2);
        for (int i : e)
            for (int j : e)
                if (i != j) CHECK(g23.edge_of_pair(i, j) == g23.edge_of_pair(j, i));
    }
    int big = g23.edge_of_pair(g23.hyp_cyclo_axis(0), g23.hyp_cyclo_axis(1));
    CHECK(g23.edges()[big].size() == 4);  // two axes + two twists
    // triple edge: H(1,2;0), H(2,3;1), H(1,3;1)
    int t = g23.edge_of_pair(g23.hyp_cyclo_offdiag(0, 1, 0), g23.hyp_cyclo_offdiag(1, 2, 1));
    CHECK(g23.edges()[t] == std::vector<int>{g23.hyp_cyclo_offdiag(0, 1, 0),
                                             g23.hyp_cyclo_offdiag(0, 2, 1),
                                             g23.hyp_cyclo_offdiag(1, 2, 1)});
}

TEST_CASE("pointwise stabilizer orders") {
    Group d6 = Group::dihedral(6);
    for (int h = 0; h < 6; ++h) CHECK(d6.stabilizer_order(h) == 2);
    Group cy = Group::cyclotomic(3, 2);
    CHECK(cy.stabilizer_order(cy.hyp_cyclo_axis(0)) == 3);
    CHECK(cy.stabilizer_order(cy.hyp_cyclo_offdiag(0, 1, 1)) == 2);
}

TEST_CASE("generator words reconstruct every element") {
    for (const Group& G : {Group::dihedral(6), Group::symmetric(4), Group::cyclotomic(3, 2)}) {
        for (int g = 0; g < G.order(); ++g) {
            int acc = G.identity();
            for (int k : G.word(g)) acc = G.mul(acc, G.generators()[k]);
            CHECK(acc == g);
        }
    }
}

TEST_CASE("pseudo reflection powers have the right order") {
    Group cy = Group::cyclotomic(3, 2);
    int s = cy.cyclo_diag(0, 1);
    CHECK(cy.mul(cy.mul(s, s), s) == cy.identity());
    CHECK(cy.mul(s, s) == cy.cyclo_diag(0, 2));
    CHECK(cy.reflection_hyp(s) == cy.hyp_cyclo_axis(0));

    int t = cy.cyclo_transposition(0, 1, 2);
    CHECK(cy.mul(t, t) == cy.identity());
    CHECK(cy.reflection_hyp(t) == cy.hyp_cyclo_offdiag(0, 1, 2));
}

TEST_CASE("dihedral reflections act as expected on hyperplane indices") {
    Group G = Group::dihedral(5);
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j)
            CHECK(G.act(G.dihedral_reflection(k), j) == ((2 * k - j) % 5 + 5) % 5);
    for (int t = 0; t < 5; ++t)
        for (int j = 0; j < 5; ++j)
            CHECK(G.act(G.dihedral_rotation(t), j) == (j + 2 * t) % 5);
}
