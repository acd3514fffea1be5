#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbr/algebra.hpp"
#include "gbr/groups.hpp"
#include "gbr/matrix.hpp"

namespace gbr {

// Matrix model of the algebra: one matrix per group element plus one per
// e_i, over an exact scalar. Quadratic covers the dihedral m=5 planes; all
// other desk-scale constructions stay rational.
template <class S>
struct Rep {
    std::string name;
    int dim = 0;
    std::vector<Mat<S>> rho;  // indexed by group element
    std::vector<Mat<S>> bar;  // indexed by hyperplane
};

using RatRep = Rep<Rational>;
using QuadRep = Rep<Quadratic>;

// Extends matrices given for G.generators() (same order) to every group
// element along the stored shortest words.
template <class S>
std::vector<Mat<S>> group_matrices(const Group& G, const std::vector<Mat<S>>& gen_mats) {
    int d = gen_mats.empty() ? 0 : gen_mats[0].rows;
    std::vector<Mat<S>> rho(G.order());
    for (int g = 0; g < G.order(); ++g) {
        Mat<S> m = Mat<S>::identity(d);
        for (int t : G.word(g)) m = m * gen_mats[t];
        rho[g] = std::move(m);
    }
    return rho;
}

// Substitutes the matrices into every defining relation instance of the
// algebra (group table, absorption, projector square, conjugation,
// commuting pairs, obstructed pairs). Returns one description per violated
// instance; empty iff the assignment is a homomorphism.
template <class S>
std::vector<std::string> verify_representation(const Algebra& A, const Rep<S>& rep) {
    const Group& G = A.group();
    const Params& p = A.params();
    const int n = G.order(), nh = G.num_hyperplanes();
    std::vector<std::string> bad;

    if (!(rep.rho[G.identity()] == Mat<S>::identity(rep.dim)))
        bad.push_back("(0) identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(rep.rho[a] * rep.rho[b] == rep.rho[G.mul(a, b)]))
                bad.push_back("(0) " + G.elem_str(a) + " * " + G.elem_str(b));

    for (const Reflection& s : G.reflections()) {
        const Mat<S>& e = rep.bar[s.hyp];
        if (!(rep.rho[s.elem] * e == e) || !(e * rep.rho[s.elem] == e))
            bad.push_back("(1) " + G.elem_str(s.elem) + " on e" + std::to_string(s.hyp));
    }

    for (int h = 0; h < nh; ++h)
        if (!(rep.bar[h] * rep.bar[h] == S(m_of(G, p, h)) * rep.bar[h]))
            bad.push_back("(2) e" + std::to_string(h));

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < nh; ++h)
            if (!(rep.rho[g] * rep.bar[h] == rep.bar[G.act(g, h)] * rep.rho[g]))
                bad.push_back("(3) " + G.elem_str(g) + ", e" + std::to_string(h));

    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) {
            if (i == j) continue;
            Mat<S> lhs = rep.bar[i] * rep.bar[j];
            if (G.pair_commutes(i, j)) {
                if (!(lhs == rep.bar[j] * rep.bar[i]))
                    bad.push_back("(4) e" + std::to_string(i) + " e" + std::to_string(j));
                continue;
            }
            const auto& R = G.r_set(i, j);
            if (!R.empty()) {
                Mat<S> mix(rep.dim, rep.dim);
                for (int s : R) mix = mix + S(mu_of(G, p, s)) * rep.rho[s];
                if (!(lhs == mix * rep.bar[j]))
                    bad.push_back("(5) e" + std::to_string(i) + " e" + std::to_string(j));
            } else if (p.variant == Variant::Hat) {
                if (!(lhs == rep.bar[j] * rep.bar[i]))
                    bad.push_back("(6h) e" + std::to_string(i) + " e" + std::to_string(j));
            } else {
                if (!lhs.is_zero())
                    bad.push_back("(6) e" + std::to_string(i) + " e" + std::to_string(j));
            }
        }
    return bad;
}

// Dimension of the unital matrix algebra generated by the image.
template <class S>
int image_span_dim(const Group& G, const Rep<S>& rep) {
    std::vector<Mat<S>> gens;
    for (int g : G.generators()) gens.push_back(rep.rho[g]);
    for (const auto& e : rep.bar) gens.push_back(e);
    return (int)span_closure(rep.dim, gens).size();
}

// Burnside criterion: irreducible iff the image spans all of End.
template <class S>
bool burnside_irreducible(const Group& G, const Rep<S>& rep) {
    return image_span_dim(G, rep) == rep.dim * rep.dim;
}

// Trace of each basis word's matrix, in basis order; distinguishes
// non-isomorphic summands.
template <class S>
std::vector<S> character(const Algebra& A, const Rep<S>& rep) {
    std::vector<S> chi;
    chi.reserve(A.dim());
    for (const NormalWord& w : A.basis()) {
        Mat<S> m = rep.rho[w.g];
        for (int t : w.tail) m = m * rep.bar[t];
        chi.push_back(m.trace());
    }
    return chi;
}

struct WedderburnSummary {
    std::vector<std::string> names;
    std::vector<int> dims;
    long total = 0;  // sum of squared dimensions
};

// Semisimple dimension lower bound from a list of matrix models: each must
// satisfy every relation instance and the Burnside criterion, and the
// characters must be pairwise distinct. Throws otherwise.
template <class S>
WedderburnSummary wedderburn_lower_bound(const Algebra& A, const std::vector<Rep<S>>& reps) {
    WedderburnSummary out;
    std::vector<std::vector<S>> chars;
    for (const Rep<S>& r : reps) {
        auto bad = verify_representation(A, r);
        if (!bad.empty())
            throw std::runtime_error("wedderburn: " + r.name + " violates " + bad.front());
        if (!burnside_irreducible(A.group(), r))
            throw std::runtime_error("wedderburn: " + r.name + " is not irreducible");
        auto chi = character(A, r);
        for (size_t k = 0; k < chars.size(); ++k)
            if (chars[k] == chi)
                throw std::runtime_error("wedderburn: " + r.name + " repeats the character of " +
                                         out.names[k]);
        chars.push_back(std::move(chi));
        out.names.push_back(r.name);
        out.dims.push_back(r.dim);
        out.total += (long)r.dim * r.dim;
    }
    return out;
}

template <class S>
Mat<std::complex<double>> complex_mat(const Mat<S>& m) {
    Mat<std::complex<double>> out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = scalar_approx(m.a[i]);
    return out;
}

// Hyperplane-space model: group elements permute the basis {v_h}, e_i maps
// v_j onto v_i weighted by m_i on the diagonal and by the mu-sum over
// {s : s(H_j) = H_i} off it.
RatRep lk_representation(const Group& G, const Params& p);

// All irreducible matrix models of the dihedral group itself (bars zero),
// exact over Q(sqrt 5); entries are plain rationals except at m = 5.
std::vector<QuadRep> dihedral_g_irreps(const Group& G);

QuadRep lift(const RatRep& rep);

// Parity restrictions of the hyperplane-space model over an even dihedral
// group, with the projector coefficient blocks whose determinants gate
// irreducibility.
struct KrSplit {
    RatRep kr0, kr1;
    RatMat m0, m1;
};
KrSplit dihedral_kr_split(const Algebra& A);

// Parity blocks of the signed model on normal-vector lines (w_j tracks the
// line of the normal to H_{[j+l]}; reflections pick up a sign), plus the
// analogous coefficient blocks.
struct KReps {
    RatRep k0, k1;
    RatMat a0, a1;
};
KReps dihedral_k_reps(const Algebra& A);

// Sign picked up by the normal line: s(n_{[j+l]}) = sign * n_{[s(j)+l]}.
// Derived from the floating-point geometry and rounded; exact by nature.
int normal_twist_sign(const Group& G, int refl_elem, int j);

// The four irreducible summands of the three-strand diagram algebra at
// mu = 1: trivial, sign, the bar-killing plane, and the hyperplane-space
// model. Indexed against Group::symmetric(3).
std::vector<RatRep> b3_brauer_irreps(const Rational& m_param);

// Left regular module: group elements and projectors acting by left
// multiplication on the basis words.
RatRep regular_representation(const Algebra& A);

}  // namespace gbr
