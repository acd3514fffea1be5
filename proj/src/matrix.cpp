#include "gbr/matrix.hpp"

namespace gbr {

int bareiss_rank(const RatMat& m, Rational* det_out) {
    int R = m.rows, C = m.cols;
    if (det_out && R != C) throw std::invalid_argument("determinant needs a square matrix");
    std::vector<std::vector<BigInt>> z(R, std::vector<BigInt>(C));
    Rational scale(1);
    for (int i = 0; i < R; ++i) {
        BigInt l(1);
        for (int j = 0; j < C; ++j) l = lcm(l, m.at(i, j).get_den());
        scale *= l;
        for (int j = 0; j < C; ++j) {
            Rational v = m.at(i, j) * l;
            z[i][j] = v.get_num();
        }
    }
    BigInt prev(1);
    int rank = 0;
    int sign = 1;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (z[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            std::swap(z[piv], z[rank]);
            sign = -sign;
        }
        for (int r = rank + 1; r < R; ++r) {
            for (int c = col + 1; c < C; ++c) {
                BigInt t = z[rank][col] * z[r][c] - z[r][col] * z[rank][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[r][c] = t;
            }
            z[r][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    if (det_out) {
        if (rank < R)
            *det_out = 0;
        else
            *det_out = Rational(sign * prev) / scale;
    }
    return rank;
}

RadicalReport trace_form_radical(int dim, const std::function<SparseVec(int, int)>& mul) {
    // tr(L_a L_b) = tr(L_{ab}) = sum_c (ab)_c tr(L_c), so precompute tr(L_c).
    std::vector<Rational> tr(dim, Rational(0));
    for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) {
            SparseVec p = mul(c, d);
            auto it = p.find(d);
            if (it != p.end()) tr[c] += it->second;
        }
    RadicalReport rep;
    rep.dim = dim;
    rep.gram = RatMat(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            Rational g(0);
            for (const auto& [c, coeff] : mul(a, b)) g += coeff * tr[c];
            rep.gram.at(a, b) = g;
            rep.gram.at(b, a) = g;
        }
    rep.gram_rank = bareiss_rank(rep.gram);
    rep.radical_dim = dim - rep.gram_rank;
    if (rep.radical_dim > 0) rep.radical_basis = nullspace(rep.gram);
    return rep;
}

}  // namespace gbr
