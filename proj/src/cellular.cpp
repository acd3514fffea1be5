#include "gbr/cellular.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbr/reps.hpp"

namespace gbr {

namespace {

std::vector<Quadratic> quad_dense(const Algebra& A, const AlgebraElement& x) {
    std::vector<Quadratic> v(A.dim(), Quadratic(Rational(0)));
    for (const auto& [w, c] : x) v[A.index_of(w)] = Quadratic(c);
    return v;
}

AlgebraElement ae_sub(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r = x;
    for (const auto& [k, c] : y) {
        auto it = r.find(k);
        if (it == r.end()) r.emplace(k, -c);
        else {
            it->second -= c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

void require_dihedral(const Algebra& A) {
    if (A.group().family() != Family::Dihedral)
        throw std::invalid_argument("cell data implemented for the dihedral family");
}

// coset-averaged projector cells: (1/k) sum of w e_{j} over {w : w(H_j) = H_i}
typename CellDatum<Quadratic>::Block kr_block(const Algebra& A, std::string name,
                                              std::vector<int> labels) {
    const Group& G = A.group();
    typename CellDatum<Quadratic>::Block b;
    b.name = std::move(name);
    b.labels = std::move(labels);
    int d = (int)b.labels.size();
    b.C.resize(d * d);
    for (int si = 0; si < d; ++si)
        for (int ti = 0; ti < d; ++ti) {
            AlgebraElement acc;
            int hits = 0;
            for (int w = 0; w < G.order(); ++w) {
                if (G.act(w, b.labels[ti]) != b.labels[si]) continue;
                ++hits;
                for (auto& [k, c] : A.multiply(A.from_group(w), A.from_e(b.labels[ti])))
                    acc[k] += c;
            }
            for (auto it = acc.begin(); it != acc.end();) {
                it->second /= hits;
                it = (it->second == 0) ? acc.erase(it) : std::next(it);
            }
            b.cell(si, ti) = quad_dense(A, acc);
        }
    return b;
}

// left-ideal cells from the seed u: C(j, i) = W_j * star(W_i * u) with the
// alternating words W
typename CellDatum<Quadratic>::Block ideal_block(const Algebra& A, std::string name,
                                                 std::vector<int> labels,
                                                 const AlgebraElement& u, int first_letter) {
    const Group& G = A.group();
    int d = (int)labels.size();
    std::vector<AlgebraElement> W(d);
    for (int i = 0; i < d; ++i) {
        int g = G.identity();
        for (int k = 0; k < i; ++k)
            g = G.mul(G.dihedral_reflection((k % 2 == 0) ? first_letter : 1 - first_letter), g);
        W[i] = A.from_group(g);
    }
    typename CellDatum<Quadratic>::Block b;
    b.name = std::move(name);
    b.labels = std::move(labels);
    b.C.resize(d * d);
    for (int ti = 0; ti < d; ++ti) {
        AlgebraElement col = A.star(A.multiply(W[ti], u));
        for (int si = 0; si < d; ++si) b.cell(si, ti) = quad_dense(A, A.multiply(W[si], col));
    }
    return b;
}

}  // namespace

CellDatum<Quadratic> base_cell_datum(const Algebra& A) {
    require_dihedral(A);
    const Group& G = A.group();
    CellDatum<Quadratic> datum;
    for (const QuadRep& r : dihedral_g_irreps(G)) {
        // invariant symmetric form of the summand
        Mat<Quadratic> Q(r.dim, r.dim);
        for (int g = 0; g < G.order(); ++g) Q = Q + r.rho[g].transpose() * r.rho[g];

        // plain matrix units F, then the star-compatible combination F Q
        Quadratic scale{rat(r.dim, G.order())};
        std::vector<std::vector<Quadratic>> F(r.dim * r.dim,
                                              std::vector<Quadratic>(A.dim(), Quadratic(Rational(0))));
        for (int g = 0; g < G.order(); ++g) {
            int idx = A.index_of(NormalWord{g, {}});
            const Mat<Quadratic>& m = r.rho[G.inv(g)];
            for (int s = 0; s < r.dim; ++s)
                for (int t = 0; t < r.dim; ++t)
                    F[s * r.dim + t][idx] = F[s * r.dim + t][idx] + scale * m.at(t, s);
        }

        typename CellDatum<Quadratic>::Block b;
        b.name = r.name;
        for (int i = 0; i < r.dim; ++i) b.labels.push_back(i);
        b.C.assign(r.dim * r.dim, std::vector<Quadratic>(A.dim(), Quadratic(Rational(0))));
        for (int s = 0; s < r.dim; ++s)
            for (int t = 0; t < r.dim; ++t)
                for (int u = 0; u < r.dim; ++u) {
                    if (Q.at(u, t).is_zero()) continue;
                    auto& dst = b.cell(s, t);
                    const auto& src = F[s * r.dim + u];
                    for (int i = 0; i < A.dim(); ++i)
                        dst[i] = dst[i] + src[i] * Q.at(u, t);
                }
        datum.blocks.push_back(std::move(b));
    }
    return datum;
}

CellDatum<Quadratic> extend_cell_datum(const Algebra& A) {
    CellDatum<Quadratic> datum = base_cell_datum(A);
    const Group& G = A.group();
    int m = G.m_param();
    if (m % 2 == 1) {
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        datum.blocks.push_back(kr_block(A, "Kr", all));
        return datum;
    }
    int l = m / 2;
    std::vector<int> even(l), odd(l);
    for (int i = 0; i < l; ++i) {
        even[i] = 2 * i;
        odd[i] = 2 * i + 1;
    }
    datum.blocks.push_back(kr_block(A, "Kr0", even));
    datum.blocks.push_back(kr_block(A, "Kr1", odd));
    AlgebraElement u0 = ae_sub(
        A.multiply(A.from_group(G.dihedral_reflection(l)), A.from_e(0)), A.from_e(0));
    AlgebraElement u1 = ae_sub(
        A.multiply(A.from_group(G.dihedral_reflection(l + 1)), A.from_e(1)), A.from_e(1));
    datum.blocks.push_back(ideal_block(A, "K0", even, u0, 1));
    datum.blocks.push_back(ideal_block(A, "K1", odd, u1, 0));
    return datum;
}

CellDatum<Rational> exact_datum(const CellDatum<Quadratic>& d) {
    CellDatum<Rational> out;
    for (const auto& b : d.blocks) {
        typename CellDatum<Rational>::Block nb;
        nb.name = b.name;
        nb.labels = b.labels;
        for (const auto& v : b.C) {
            std::vector<Rational> nv;
            for (const Quadratic& q : v) {
                if (!(q.b == 0)) throw std::domain_error("irrational cell coefficient");
                nv.push_back(q.a);
            }
            nb.C.push_back(std::move(nv));
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

CellDatum<double> numeric_datum(const CellDatum<Quadratic>& d) {
    CellDatum<double> out;
    for (const auto& b : d.blocks) {
        typename CellDatum<double>::Block nb;
        nb.name = b.name;
        nb.labels = b.labels;
        for (const auto& v : b.C) {
            std::vector<double> nv;
            for (const Quadratic& q : v) nv.push_back(q.approx());
            nb.C.push_back(std::move(nv));
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

namespace {

template <class S>
S conv(const Rational& x);
template <>
Rational conv<Rational>(const Rational& x) {
    return x;
}
template <>
double conv<double>(const Rational& x) {
    return x.get_d();
}

// dense LU with magnitude pivoting; works for exact and floating scalars
template <class S>
struct LU {
    int n = 0;
    Mat<S> m;
    std::vector<int> swap_row;
    bool singular = false;

    LU(Mat<S> a, double eps) : n(a.rows), m(std::move(a)), swap_row(n) {
        for (int c = 0; c < n; ++c) {
            int best = -1;
            double mag = 0;
            for (int r = c; r < n; ++r) {
                if (scalar_is_zero(m.at(r, c), eps)) continue;
                double v = std::abs(scalar_approx(m.at(r, c)));
                if (best < 0 || v > mag) {
                    best = r;
                    mag = v;
                }
            }
            if (best < 0) {
                singular = true;
                return;
            }
            swap_row[c] = best;
            if (best != c)
                for (int j = 0; j < n; ++j) std::swap(m.at(best, j), m.at(c, j));
            for (int r = c + 1; r < n; ++r) {
                if (scalar_is_zero(m.at(r, c), 0.0)) continue;
                S f = m.at(r, c) / m.at(c, c);
                m.at(r, c) = f;
                for (int j = c + 1; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
            }
        }
    }

    std::vector<S> solve(std::vector<S> b) const {
        for (int c = 0; c < n; ++c) std::swap(b[c], b[swap_row[c]]);
        for (int c = 0; c < n; ++c)
            for (int r = c + 1; r < n; ++r) b[r] -= m.at(r, c) * b[c];
        for (int c = n - 1; c >= 0; --c) {
            for (int j = c + 1; j < n; ++j) b[c] -= m.at(c, j) * b[j];
            b[c] = b[c] / m.at(c, c);
        }
        return b;
    }
};

struct CellRef {
    int block, s, t;
};

template <class S>
CellReport verify_impl(const Algebra& A, const CellDatum<S>& d, double eps) {
    CellReport rep;
    const Group& G = A.group();
    int dim = A.dim(), N = d.cell_count();
    auto witness = [&](std::string w) {
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(std::move(w));
    };

    // (C1) the cells must fill a square change of basis
    std::vector<CellRef> refs;
    Mat<S> CM(dim, N);
    {
        int col = 0;
        for (int bi = 0; bi < (int)d.blocks.size(); ++bi) {
            const auto& b = d.blocks[bi];
            int k = (int)b.labels.size();
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t, ++col) {
                    refs.push_back({bi, s, t});
                    for (int i = 0; i < dim; ++i) CM.at(i, col) = b.cell(s, t)[i];
                }
        }
    }
    if (N != dim) {
        witness("cell count " + std::to_string(N) + " differs from dimension " +
                std::to_string(dim));
        return rep;
    }
    LU<S> lu(CM, eps);
    rep.c1 = !lu.singular;
    if (lu.singular) {
        witness("cells are linearly dependent");
        return rep;
    }

    // (C2) star in basis coordinates
    Mat<S> St(dim, dim);
    for (int j = 0; j < dim; ++j) {
        auto img = A.to_dense(A.star(AlgebraElement{{A.basis()[j], 1}}));
        for (int i = 0; i < dim; ++i) St.at(i, j) = conv<S>(img[i]);
    }
    rep.c2 = true;
    for (const auto& b : d.blocks) {
        int k = (int)b.labels.size();
        for (int s = 0; s < k && rep.c2; ++s)
            for (int t = 0; t < k && rep.c2; ++t) {
                const auto& x = b.cell(s, t);
                const auto& y = b.cell(t, s);
                for (int i = 0; i < dim; ++i) {
                    S v(0);
                    for (int j = 0; j < dim; ++j)
                        if (!scalar_is_zero(St.at(i, j), 0.0)) v += St.at(i, j) * x[j];
                    if (!scalar_is_zero(v - y[i], eps)) {
                        rep.c2 = false;
                        witness("star of " + b.name + "(" + std::to_string(b.labels[s]) + "," +
                                std::to_string(b.labels[t]) + ") is not the transposed cell");
                        break;
                    }
                }
            }
    }

    // (C3) expand a * C over the cell basis for every algebra generator a
    std::vector<std::pair<std::string, int>> gens;  // name, basis index
    for (size_t gi = 0; gi < G.generators().size(); ++gi)
        gens.push_back({G.generator_names()[gi],
                        A.index_of(NormalWord{G.generators()[gi], {}})});
    for (int h = 0; h < G.num_hyperplanes(); ++h) {
        AlgebraElement e = A.from_e(h);
        gens.push_back({"e" + std::to_string(h), A.index_of(e.begin()->first)});
    }

    rep.c3 = true;
    for (const auto& [gname, gidx] : gens) {
        Mat<S> L(dim, dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [i, c] : A.product(gidx, j)) L.at(i, j) = conv<S>(c);

        for (int bi = 0; bi < (int)d.blocks.size(); ++bi) {
            const auto& b = d.blocks[bi];
            int k = (int)b.labels.size();
            // r[s' * k + s] frozen on the first column, compared on the rest
            std::vector<S> r(k * k, S(0));
            for (int t = 0; t < k; ++t)
                for (int s = 0; s < k; ++s) {
                    std::vector<S> y(dim, S(0));
                    const auto& x = b.cell(s, t);
                    for (int j = 0; j < dim; ++j) {
                        if (scalar_is_zero(x[j], 0.0)) continue;
                        for (int i = 0; i < dim; ++i) y[i] += L.at(i, j) * x[j];
                    }
                    auto coords = lu.solve(std::move(y));
                    for (int col = 0; col < N; ++col) {
                        const CellRef& ref = refs[col];
                        const S& c = coords[col];
                        if (scalar_is_zero(c, eps)) continue;
                        if (ref.block < bi) {
                            rep.c3 = false;
                            witness(gname + " * " + b.name + " cell leaks into the higher cell " +
                                    d.blocks[ref.block].name);
                        } else if (ref.block == bi && ref.t != t) {
                            rep.c3 = false;
                            witness(gname + " * " + b.name + "(_, " +
                                    std::to_string(b.labels[t]) + ") touches column " +
                                    std::to_string(b.labels[ref.t]));
                        }
                    }
                    for (int sp = 0; sp < k; ++sp) {
                        // coordinate of C(sp, t) inside this block
                        int col0 = 0;
                        for (int pb = 0; pb < bi; ++pb)
                            col0 += (int)(d.blocks[pb].labels.size() * d.blocks[pb].labels.size());
                        const S& c = coords[col0 + sp * k + t];
                        if (t == 0) r[sp * k + s] = c;
                        else if (!scalar_is_zero(c - r[sp * k + s], eps)) {
                            rep.c3 = false;
                            witness("coefficient of " + gname + " * " + b.name +
                                    " depends on the column index");
                        }
                    }
                }
        }
        if (!rep.c3 && rep.witnesses.size() >= 8) break;
    }
    return rep;
}

}  // namespace

CellReport verify_cellular(const Algebra& A, const CellDatum<Rational>& d) {
    return verify_impl<Rational>(A, d, 0.0);
}

CellReport verify_cellular(const Algebra& A, const CellDatum<double>& d, double eps) {
    return verify_impl<double>(A, d, eps);
}

}  // namespace gbr
