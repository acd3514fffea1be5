#include "gbr/reps.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace gbr {

RatRep lk_representation(const Group& G, const Params& p) {
    validate_params(G, p);
    int H = G.num_hyperplanes();
    RatRep rep;
    rep.name = "lk";
    rep.dim = H;
    rep.rho.resize(G.order());
    for (int g = 0; g < G.order(); ++g) {
        RatMat m(H, H);
        for (int j = 0; j < H; ++j) m.at(G.act(g, j), j) = 1;
        rep.rho[g] = std::move(m);
    }
    rep.bar.resize(H);
    for (int i = 0; i < H; ++i) {
        RatMat m(H, H);
        m.at(i, i) = m_of(G, p, i);
        for (int j = 0; j < H; ++j) {
            if (j == i) continue;
            Rational a(0);
            for (int s : G.r_set(i, j)) a += mu_of(G, p, s);
            m.at(i, j) = a;
        }
        rep.bar[i] = std::move(m);
    }
    return rep;
}

// cos(2*pi*k/m) for the m with an exact value in Q or Q(sqrt 5)
static Quadratic dihedral_cos(int m, int k) {
    switch (m) {
        case 3: return Quadratic(rat(-1, 2));
        case 4: return Quadratic(rat(0));
        case 6: return Quadratic(k == 1 ? rat(1, 2) : rat(-1, 2));
        case 5: return {rat(-1, 4), k == 1 ? rat(1, 4) : rat(-1, 4), 5};
    }
    throw std::invalid_argument("dihedral_g_irreps: no exact cosine for m=" + std::to_string(m));
}

std::vector<QuadRep> dihedral_g_irreps(const Group& G) {
    if (G.family() != Family::Dihedral)
        throw std::invalid_argument("dihedral_g_irreps: dihedral only");
    int m = G.m_param(), H = G.num_hyperplanes();
    std::vector<QuadRep> out;

    auto linear = [&](const std::string& name, int s0, int s1) {
        QuadRep r;
        r.name = name;
        r.dim = 1;
        std::vector<Mat<Quadratic>> gm(2, Mat<Quadratic>(1, 1));
        gm[0].at(0, 0) = Quadratic(rat(s0));
        gm[1].at(0, 0) = Quadratic(rat(s1));
        r.rho = group_matrices(G, gm);
        r.bar.assign(H, Mat<Quadratic>(1, 1));
        out.push_back(std::move(r));
    };
    linear("triv", 1, 1);
    linear("sgn", -1, -1);
    if (m % 2 == 0) {
        linear("sgn0", -1, 1);  // -1 exactly on the even-index reflections
        linear("sgn1", 1, -1);
    }

    for (int k = 1; 2 * k < m; ++k) {
        Quadratic c = dihedral_cos(m, k);
        Mat<Quadratic> R(2, 2), S(2, 2);
        R.at(0, 1) = Quadratic(rat(-1));
        R.at(1, 0) = Quadratic(rat(1));
        R.at(1, 1) = Quadratic(rat(2)) * c;
        S.at(0, 0) = Quadratic(rat(1));
        S.at(0, 1) = Quadratic(rat(2)) * c;
        S.at(1, 1) = Quadratic(rat(-1));
        QuadRep r;
        r.name = "plane" + std::to_string(k);
        r.dim = 2;
        r.rho = group_matrices(G, std::vector<Mat<Quadratic>>{S, R * S});
        r.bar.assign(H, Mat<Quadratic>(2, 2));
        out.push_back(std::move(r));
    }
    return out;
}

QuadRep lift(const RatRep& rep) {
    auto conv = [](const RatMat& m) {
        Mat<Quadratic> q(m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Quadratic(m.a[i]);
        return q;
    };
    QuadRep out;
    out.name = rep.name;
    out.dim = rep.dim;
    for (const auto& m : rep.rho) out.rho.push_back(conv(m));
    for (const auto& m : rep.bar) out.bar.push_back(conv(m));
    return out;
}

static void require_even_dihedral(const Group& G, const char* who) {
    if (G.family() != Family::Dihedral || G.m_param() % 2)
        throw std::invalid_argument(std::string(who) + ": even dihedral only");
}

KrSplit dihedral_kr_split(const Algebra& A) {
    const Group& G = A.group();
    require_even_dihedral(G, "dihedral_kr_split");
    int m = G.m_param(), l = m / 2;
    RatRep lk = lk_representation(G, A.params());

    KrSplit out;
    auto restrict_to = [&](int par) {
        RatRep r;
        r.name = par ? "kr1" : "kr0";
        r.dim = l;
        r.rho.resize(G.order());
        for (int g = 0; g < G.order(); ++g) {
            RatMat mm(l, l);
            for (int j = 0; j < l; ++j) mm.at(G.act(g, 2 * j + par) / 2, j) = 1;
            r.rho[g] = std::move(mm);
        }
        r.bar.assign(m, RatMat(l, l));
        for (int h = par; h < m; h += 2) {
            RatMat mm(l, l);
            for (int j = 0; j < l; ++j) mm.at(h / 2, j) = lk.bar[h].at(h, 2 * j + par);
            r.bar[h] = std::move(mm);
        }
        return r;
    };
    out.kr0 = restrict_to(0);
    out.kr1 = restrict_to(1);
    out.m0 = RatMat(l, l);
    out.m1 = RatMat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            out.m0.at(i, j) = lk.bar[2 * i].at(2 * i, 2 * j);
            out.m1.at(i, j) = lk.bar[2 * i + 1].at(2 * i + 1, 2 * j + 1);
        }
    return out;
}

int normal_twist_sign(const Group& G, int refl_elem, int j) {
    require_even_dihedral(G, "normal_twist_sign");
    int m = G.m_param(), l = m / 2;
    auto M = G.element_matrix(refl_elem);
    auto src = G.normal((j + l) % m);
    auto dst = G.normal((G.act(refl_elem, j) + l) % m);
    std::complex<double> inner(0);
    for (int t = 0; t < 2; ++t)
        inner += (M.at(t, 0) * src[0] + M.at(t, 1) * src[1]) * std::conj(dst[t]);
    if (std::abs(std::abs(inner) - 1.0) > 1e-9 || std::abs(inner.imag()) > 1e-9)
        throw std::logic_error("normal_twist_sign: normals not aligned");
    return inner.real() > 0 ? 1 : -1;
}

KReps dihedral_k_reps(const Algebra& A) {
    const Group& G = A.group();
    require_even_dihedral(G, "dihedral_k_reps");
    const Params& p = A.params();
    int m = G.m_param(), l = m / 2;

    std::vector<RatMat> gm;
    for (int t = 0; t < 2; ++t) {
        int s = G.dihedral_reflection(t);
        RatMat mm(m, m);
        for (int j = 0; j < m; ++j) mm.at(G.act(s, j), j) = normal_twist_sign(G, s, j);
        gm.push_back(std::move(mm));
    }
    auto rho = group_matrices(G, gm);

    // The signed analogues of the projectors. The coefficient formula is
    // forced: the diagonal by e_i^2 = m_i e_i, the rest by the obstructed
    // pair relation applied to the signed group action.
    std::vector<RatMat> bars(m);
    for (int i = 0; i < m; ++i) {
        RatMat mm(m, m);
        mm.at(i, i) = m_of(G, p, i);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            Rational c(0);
            for (int s : G.r_set(i, j)) c += mu_of(G, p, s) * normal_twist_sign(G, s, j);
            mm.at(i, j) = c;
        }
        bars[i] = std::move(mm);
    }

    KReps out;
    auto restrict_to = [&](int par) {
        RatRep r;
        r.name = par ? "k1" : "k0";
        r.dim = l;
        r.rho.resize(G.order());
        for (int g = 0; g < G.order(); ++g) {
            RatMat mm(l, l);
            for (int j = 0; j < l; ++j) {
                int h = 2 * j + par, h2 = G.act(g, h);
                mm.at(h2 / 2, j) = rho[g].at(h2, h);
            }
            r.rho[g] = std::move(mm);
        }
        r.bar.assign(m, RatMat(l, l));
        for (int h = par; h < m; h += 2) {
            RatMat mm(l, l);
            for (int j = 0; j < l; ++j) mm.at(h / 2, j) = bars[h].at(h, 2 * j + par);
            r.bar[h] = std::move(mm);
        }
        return r;
    };
    out.k0 = restrict_to(0);
    out.k1 = restrict_to(1);
    out.a0 = RatMat(l, l);
    out.a1 = RatMat(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            out.a0.at(i, j) = bars[2 * i].at(2 * i, 2 * j);
            out.a1.at(i, j) = bars[2 * i + 1].at(2 * i + 1, 2 * j + 1);
        }
    return out;
}

// transposition (a b) of {0,1,2} on the plane sum(x) = 0, basis e0-e1, e1-e2
static RatMat std2_for_pair(int a, int b) {
    int perm[3] = {0, 1, 2};
    std::swap(perm[a], perm[b]);
    RatMat M(2, 2);
    for (int col = 0; col < 2; ++col) {
        int c[3] = {0, 0, 0};
        c[perm[col]] += 1;
        c[perm[col + 1]] -= 1;
        M.at(0, col) = c[0];
        M.at(1, col) = -c[2];
    }
    return M;
}

std::vector<RatRep> b3_brauer_irreps(const Rational& m_param) {
    Group G = Group::symmetric(3);
    Params p;
    p.mu[G.reflection_classes()[0].name] = 1;
    p.m[G.hyperplane_orbits()[0].name] = m_param;
    int H = G.num_hyperplanes();
    std::vector<RatRep> out;

    for (int sgn = 0; sgn < 2; ++sgn) {
        RatRep r;
        r.name = sgn ? "sign" : "trivial";
        r.dim = 1;
        r.rho.resize(G.order());
        for (int g = 0; g < G.order(); ++g) {
            RatMat mm(1, 1);
            mm.at(0, 0) = (sgn && G.word(g).size() % 2) ? -1 : 1;
            r.rho[g] = std::move(mm);
        }
        r.bar.assign(H, RatMat(1, 1));
        out.push_back(std::move(r));
    }

    {
        RatRep r;
        r.name = "standard";
        r.dim = 2;
        std::vector<RatMat> gm;
        for (size_t t = 0; t < G.generators().size(); ++t) gm.push_back(std2_for_pair((int)t, (int)t + 1));
        r.rho = group_matrices(G, gm);
        r.bar.assign(H, RatMat(2, 2));
        out.push_back(std::move(r));
    }

    RatRep lk = lk_representation(G, p);
    lk.name = "bars";
    out.push_back(std::move(lk));
    return out;
}

RatRep regular_representation(const Algebra& A) {
    const Group& G = A.group();
    RatRep rep;
    rep.name = "regular";
    rep.dim = A.dim();
    auto left_mult = [&](const AlgebraElement& x) {
        RatMat m(rep.dim, rep.dim);
        for (int j = 0; j < rep.dim; ++j) {
            AlgebraElement bj{{A.basis()[j], 1}};
            auto col = A.to_dense(A.multiply(x, bj));
            for (int i = 0; i < rep.dim; ++i) m.at(i, j) = col[i];
        }
        return m;
    };
    for (int g = 0; g < G.order(); ++g) rep.rho.push_back(left_mult(A.from_group(g)));
    for (int h = 0; h < G.num_hyperplanes(); ++h) rep.bar.push_back(left_mult(A.from_e(h)));
    return rep;
}

}  // namespace gbr
