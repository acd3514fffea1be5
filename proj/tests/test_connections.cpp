#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "gbr/connections.hpp"

using namespace gbr;

namespace {

// conjugation data for the table living inside its own algebra
auto group_phi(const Algebra& A) {
    return [&A](int g) { return BoundElement{&A, A.from_group(g)}; };
}

DiagramElement perm_diagram(const Group& Sn, int g, int n, const Rational& tau) {
    DiagramElement acc = one_elem(n, tau);
    for (int t : Sn.word(g)) acc = acc * s_elem(t, t + 1, n, tau);
    return acc;
}

}  // namespace

TEST_CASE("group-part tables are flat and equivariant") {
    for (int m : {3, 4, 5, 6}) {
        Group G = Group::dihedral(m);
        Algebra A = build_algebra(G, generic_params(G));
        auto conn = cherednik_connection(A);
        CHECK(conn.X.size() == (size_t)m);
        CHECK(check_flat(conn).empty());
        CHECK(check_invariance(conn, group_phi(A)).empty());
    }
    Group G = Group::cyclotomic(2, 2);
    Algebra A = build_algebra(G, generic_params(G));
    CHECK(check_flat(cherednik_connection(A)).empty());
}

TEST_CASE("formal projector tables are flat inside the algebras") {
    // flatness of X_i = sum mu_s s - e_i is a statement about the defining
    // relations, not any particular matrix model; it holds in every algebra
    // the builder certifies.
    for (int m : {3, 4, 5, 6}) {
        Group G = Group::dihedral(m);
        Algebra A = build_algebra(G, generic_params(G));
        auto conn = gbrauer_connection(A);
        CHECK(check_flat(conn).empty());
        CHECK(check_invariance(conn, group_phi(A)).empty());
    }
    for (int mk : {2, 3}) {
        Group G = Group::cyclotomic(mk, 2);
        Algebra A = build_algebra(G, generic_params(G));
        CHECK(check_flat(gbrauer_connection(A)).empty());
    }
    {
        Group G = Group::symmetric(3);
        Algebra A = build_algebra(G, generic_params(G));
        auto conn = gbrauer_connection(A);
        CHECK(check_flat(conn).empty());
        CHECK(check_invariance(conn, group_phi(A)).empty());
    }
    {
        Group G = Group::symmetric(4);
        Algebra A = Algebra::quotiented(G, generic_params(G));
        CHECK(check_flat(gbrauer_connection(A)).empty());
    }
}

TEST_CASE("diagram-valued tables are flat and equivariant") {
    Rational tau = rat(7, 3);
    {
        // two strands: a single hyperplane, no codimension-two edges at all
        Group S2 = Group::symmetric(2);
        CHECK(S2.edges().empty());
        CHECK(check_flat(brauer_connection(S2, tau)).empty());
    }
    for (int n : {3, 4}) {
        Group Sn = Group::symmetric(n);
        auto conn = brauer_connection(Sn, tau);
        CHECK(conn.X.size() == (size_t)Sn.num_hyperplanes());
        CHECK(check_flat(conn).empty());
        auto inv = check_invariance(
            conn, [&](int g) { return perm_diagram(Sn, g, n, tau); });
        CHECK(inv.empty());
    }
}

TEST_CASE("permutation-action table agrees with its represented form") {
    Group G = Group::dihedral(5);
    Params p = generic_params(G);
    auto lkc = lk_connection(G, p);
    CHECK(check_flat(lkc).empty());

    RatRep lk = lk_representation(G, p);
    auto rc = rho_connection(G, p, lk);
    REQUIRE(rc.X.size() == lkc.X.size());
    for (size_t i = 0; i < lkc.X.size(); ++i) CHECK(rc.X[i] == lkc.X[i]);

    CHECK(check_invariance(lkc, [&](int g) { return lk.rho[g]; }).empty());

    Group H = Group::cyclotomic(2, 2);
    Params q = generic_params(H);
    auto hc = lk_connection(H, q);
    CHECK(check_flat(hc).empty());
    RatRep hlk = lk_representation(H, q);
    CHECK(check_invariance(hc, [&](int g) { return hlk.rho[g]; }).empty());
}

TEST_CASE("represented tables are flat for every matrix summand") {
    for (int m : {4, 5, 6}) {
        Group G = Group::dihedral(m);
        Params p = generic_params(G);
        for (const auto& r : dihedral_g_irreps(G))
            CHECK(check_flat(rho_connection(G, p, r)).empty());
        if (m % 2 == 0) {
            Algebra A = build_algebra(G, p);
            KrSplit ks = dihedral_kr_split(A);
            KReps kk = dihedral_k_reps(A);
            for (const RatRep* r : {&ks.kr0, &ks.kr1, &kk.k0, &kk.k1})
                CHECK(check_flat(rho_connection(G, p, *r)).empty());
        }
    }
}

TEST_CASE("wrong mixing weights break flatness on the shared edge") {
    Group G = Group::dihedral(5);
    Params p = generic_params(G);
    auto conn = lk_connection(G, p);
    conn.X[0].at(0, 1) -= 1;
    auto bad = check_flat(conn);
    REQUIRE(bad.size() == 5);
    std::set<int> members;
    for (const auto& item : bad) {
        CHECK(item.edge == 0);  // the dihedral arrangement has one edge
        CHECK(item.residual_terms > 0);
        members.insert(item.member);
    }
    CHECK(members == std::set<int>{0, 1, 2, 3, 4});
}

TEST_CASE("orbit-inconstant diagonals break equivariance") {
    Group G = Group::dihedral(5);
    Params p = generic_params(G);
    RatRep lk = lk_representation(G, p);
    auto phi = [&](int g) { return lk.rho[g]; };

    // shift the full weight of one hyperplane: scalar shifts keep every
    // commutator but the orbit is no longer constant
    auto conn = lk_connection(G, p);
    conn.X[0] = conn.X[0] - RatMat::identity(5);
    CHECK(check_flat(conn).empty());
    CHECK(check_invariance(conn, phi).size() == 2);

    auto swapped = lk_connection(G, p);
    std::swap(swapped.X[0], swapped.X[1]);
    CHECK_FALSE(check_invariance(swapped, phi).empty());
}

TEST_CASE("rescaling the whole table changes no verdict") {
    Group G = Group::dihedral(4);
    Algebra A = build_algebra(G, generic_params(G));
    auto conn = gbrauer_connection(A);
    BoundElement scale{&A, A.from_group(G.identity())};
    for (auto& [k, c] : scale.v) c *= rat(3, 7);
    for (auto& x : conn.X) x = scale * x;
    CHECK(check_flat(conn).empty());
    CHECK(check_invariance(conn, group_phi(A)).empty());
}
