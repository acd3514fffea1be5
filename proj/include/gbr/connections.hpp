#pragma once

#include <string>
#include <vector>

#include "gbr/algebra.hpp"
#include "gbr/diagrams.hpp"
#include "gbr/groups.hpp"
#include "gbr/matrix.hpp"
#include "gbr/reps.hpp"

namespace gbr {

// Algebra element bound to its algebra, so connection coefficients compose
// like plain values.
struct BoundElement {
    const Algebra* A = nullptr;
    AlgebraElement v;

    bool is_zero() const { return v.empty(); }

    friend BoundElement operator*(const BoundElement& x, const BoundElement& y) {
        return {x.A, x.A->multiply(x.v, y.v)};
    }
    friend BoundElement operator+(const BoundElement& x, const BoundElement& y) {
        BoundElement r = x;
        for (const auto& [k, c] : y.v) {
            auto it = r.v.find(k);
            if (it == r.v.end()) r.v.emplace(k, c);
            else {
                it->second += c;
                if (it->second == 0) r.v.erase(it);
            }
        }
        return r;
    }
    friend BoundElement operator-(const BoundElement& x, const BoundElement& y) {
        BoundElement r = x;
        for (const auto& [k, c] : y.v) {
            auto it = r.v.find(k);
            if (it == r.v.end()) r.v.emplace(k, -c);
            else {
                it->second -= c;
                if (it->second == 0) r.v.erase(it);
            }
        }
        return r;
    }
};

inline int term_count(const BoundElement& x) { return (int)x.v.size(); }
inline int term_count(const DiagramElement& x) { return (int)x.terms().size(); }
template <class S>
int term_count(const Mat<S>& m) {
    int k = 0;
    for (const auto& v : m.a)
        if (!scalar_is_zero(v, 0.0)) ++k;
    return k;
}

// Hyperplane-indexed coefficient table over a reflection arrangement. The
// scalar prefactor and the logarithmic one-forms are never materialized:
// flatness is exactly the codim-2 commutator condition and invariance the
// conjugation condition, both independent of them.
template <class C>
struct Connection {
    const Group* G = nullptr;
    std::string kind;
    std::vector<C> X;
};

struct FlatItem {
    int edge;
    int member;  // hyperplane whose commutator fails
    int residual_terms;
};

// [X_i, sum_{j in L} X_j] for every codim-2 edge L and every member i;
// empty result iff the connection is flat.
template <class C>
std::vector<FlatItem> check_flat(const Connection<C>& conn) {
    std::vector<FlatItem> out;
    const auto& edges = conn.G->edges();
    for (int e = 0; e < (int)edges.size(); ++e) {
        const auto& L = edges[e];
        C sum = conn.X[L[0]];
        for (size_t t = 1; t < L.size(); ++t) sum = sum + conn.X[L[t]];
        for (int i : L) {
            C r = conn.X[i] * sum - sum * conn.X[i];
            if (!r.is_zero()) out.push_back({e, i, term_count(r)});
        }
    }
    return out;
}

// phi(w) X_i phi(w)^{-1} = X_{w(i)} over the group generators; phi maps a
// group element id to a unit coefficient.
template <class C, class Phi>
std::vector<std::string> check_invariance(const Connection<C>& conn, Phi&& phi) {
    std::vector<std::string> out;
    const Group& G = *conn.G;
    for (int w : G.generators())
        for (int i = 0; i < G.num_hyperplanes(); ++i) {
            C r = phi(w) * conn.X[i] * phi(G.inv(w)) - conn.X[G.act(w, i)];
            if (!r.is_zero())
                out.push_back(G.elem_str(w) + " moves X" + std::to_string(i) + " wrong");
        }
    return out;
}

// X_i = sum of mu_s s over the reflections fixing H_i, in the group part.
Connection<BoundElement> cherednik_connection(const Algebra& A);

// X_i = sum of mu_s s - e_i: the formal table inside the algebra itself.
Connection<BoundElement> gbrauer_connection(const Algebra& A);

// X_{ij} = s_{ij} - e_{ij} over the type-A arrangement, diagram-valued.
// Sn must be Group::symmetric(n) and outlive the connection.
Connection<DiagramElement> brauer_connection(const Group& Sn, const Rational& tau);

// Realized table of a matrix model: X_i = sum mu_s rho(s) - rho(e_i).
template <class S>
Connection<Mat<S>> rho_connection(const Group& G, const Params& p, const Rep<S>& rep) {
    Connection<Mat<S>> conn{&G, "rho(" + rep.name + ")", {}};
    for (int i = 0; i < G.num_hyperplanes(); ++i) {
        Mat<S> x(rep.dim, rep.dim);
        for (const Reflection& s : G.reflections())
            if (s.hyp == i) x = x + S(mu_of(G, p, s.elem)) * rep.rho[s.elem];
        conn.X.push_back(x - rep.bar[i]);
    }
    return conn;
}

// The same table built from the permutation action and the weight rows
// directly, without going through a Rep.
Connection<RatMat> lk_connection(const Group& G, const Params& p);

}  // namespace gbr
