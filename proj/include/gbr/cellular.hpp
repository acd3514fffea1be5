#pragma once

#include <string>
#include <vector>

#include "gbr/algebra.hpp"
#include "gbr/matrix.hpp"
#include "gbr/rational.hpp"

namespace gbr {

// Cell datum over the algebra: blocks in descending order (highest cell
// first), each holding the |labels|^2 cell elements as dense coefficient
// vectors over the algebra basis.
template <class S>
struct CellDatum {
    struct Block {
        std::string name;
        std::vector<int> labels;
        std::vector<std::vector<S>> C;  // row-major (s, t)

        const std::vector<S>& cell(int s, int t) const { return C[s * labels.size() + t]; }
        std::vector<S>& cell(int s, int t) { return C[s * labels.size() + t]; }
    };

    std::vector<Block> blocks;

    int cell_count() const {
        int n = 0;
        for (const auto& b : blocks) n += (int)(b.labels.size() * b.labels.size());
        return n;
    }
};

struct CellReport {
    bool c1 = false;  // cells form a basis
    bool c2 = false;  // star swaps the two indices
    bool c3 = false;  // left multiplication is triangular with row
                      // coefficients independent of the column
    std::vector<std::string> witnesses;

    bool ok() const { return c1 && c2 && c3; }
};

// Matrix-unit cells of the group-algebra part, one block per matrix summand,
// made star-compatible through the invariant bilinear form of the summand.
CellDatum<Quadratic> base_cell_datum(const Algebra& A);

// Appends the projector cells under the group cells: for odd m one block on
// {0..m-1} with cells w e_j (w sending H_j to H_i); for even m the parity
// blocks Kr0, Kr1 (coset-averaged w e_j) and K0, K1 (alternating words
// applied to s_l e_0 - e_0 resp. s_{l+1} e_1 - e_1).
CellDatum<Quadratic> extend_cell_datum(const Algebra& A);

// Scalar conversions: exact rational (throws when an irrational coefficient
// survives, i.e. outside the crystallographic cases) and numeric.
CellDatum<Rational> exact_datum(const CellDatum<Quadratic>& d);
CellDatum<double> numeric_datum(const CellDatum<Quadratic>& d);

CellReport verify_cellular(const Algebra& A, const CellDatum<Rational>& d);
CellReport verify_cellular(const Algebra& A, const CellDatum<double>& d, double eps);

}  // namespace gbr
