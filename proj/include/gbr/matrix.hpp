#pragma once

#include <complex>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "gbr/rational.hpp"

namespace gbr {

// Zero test policies for the templated elimination routines.
inline bool scalar_is_zero(const Rational& x, double) { return x == 0; }
inline bool scalar_is_zero(const Quadratic& x, double) { return x.is_zero(); }
inline bool scalar_is_zero(double x, double eps) { return std::abs(x) < eps; }
inline bool scalar_is_zero(const std::complex<double>& x, double eps) { return std::abs(x) < eps; }

template <class S>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<S> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r * c, S(0)) {}

    S& at(int i, int j) { return a[i * cols + j]; }
    const S& at(int i, int j) const { return a[i * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const S& v = x.at(i, k);
                if (scalar_is_zero(v, 0.0)) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
        return r;
    }
    friend Mat operator*(const S& c, const Mat& y) {
        Mat r = y;
        for (auto& v : r.a) v = c * v;
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    bool is_zero(double eps = 0.0) const {
        for (const auto& v : a)
            if (!scalar_is_zero(v, eps)) return false;
        return true;
    }
    S trace() const {
        S t(0);
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }
    Mat transpose() const {
        Mat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }
};

using RatMat = Mat<Rational>;

// Fraction-free (Bareiss) elimination over integers after clearing row
// denominators; keeps intermediate entries as minors, avoiding mpq blowup.
// Returns the rank. If det_out is non-null the matrix must be square and
// the exact determinant is stored there.
int bareiss_rank(const RatMat& m, Rational* det_out = nullptr);

inline Rational rat_det(const RatMat& m) {
    Rational d;
    bareiss_rank(m, &d);
    return d;
}

// Incremental row-space basis over a field scalar; used for independence
// tests and algebra span closures.
template <class S>
class EchelonBasis {
  public:
    explicit EchelonBasis(int width, double eps = 0.0) : width_(width), eps_(eps) {}

    // Reduces v against the basis; if a nonzero residue remains it is added
    // and true is returned.
    bool add(std::vector<S> v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        S inv = S(1) / v[p];
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<S> v) const {
        reduce(v);
        return pivot_of(v) < 0;
    }

    int dim() const { return (int)rows_.size(); }
    const std::vector<std::vector<S>>& rows() const { return rows_; }

  private:
    void reduce(std::vector<S>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const S& c = v[pivots_[r]];
            if (scalar_is_zero(c, eps_)) continue;
            S f = c;
            for (int j = 0; j < width_; ++j) v[j] -= f * rows_[r][j];
        }
    }
    int pivot_of(const std::vector<S>& v) const {
        for (int j = 0; j < width_; ++j)
            if (!scalar_is_zero(v[j], eps_)) return j;
        return -1;
    }

    int width_;
    double eps_;
    std::vector<std::vector<S>> rows_;
    std::vector<int> pivots_;
};

template <class S>
int gauss_rank(Mat<S> m, double eps = 0.0) {
    EchelonBasis<S> basis(m.cols, eps);
    for (int i = 0; i < m.rows; ++i)
        basis.add(std::vector<S>(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols));
    return basis.dim();
}

// Basis of {x : m x = 0}.
template <class S>
std::vector<std::vector<S>> nullspace(const Mat<S>& m, double eps = 0.0) {
    // reduced row echelon
    std::vector<std::vector<S>> rows;
    std::vector<int> pivots;
    for (int i = 0; i < m.rows; ++i) {
        std::vector<S> v(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
        for (size_t r = 0; r < rows.size(); ++r) {
            S f = v[pivots[r]];
            if (scalar_is_zero(f, eps)) continue;
            for (int j = 0; j < m.cols; ++j) v[j] -= f * rows[r][j];
        }
        int p = -1;
        for (int j = 0; j < m.cols; ++j)
            if (!scalar_is_zero(v[j], eps)) { p = j; break; }
        if (p < 0) continue;
        S inv = S(1) / v[p];
        for (auto& x : v) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            S f = rows[r][p];
            if (scalar_is_zero(f, eps)) continue;
            for (int j = 0; j < m.cols; ++j) rows[r][j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<S> v(m.cols, S(0));
        v[j] = S(1);
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the unital matrix algebra generated by gens (d x d over S),
// grown by closing the identity under right multiplication.
template <class S>
std::vector<Mat<S>> span_closure(int d, const std::vector<Mat<S>>& gens, double eps = 0.0) {
    EchelonBasis<S> basis(d * d, eps);
    std::vector<Mat<S>> out;
    std::deque<Mat<S>> work;
    work.push_back(Mat<S>::identity(d));
    while (!work.empty()) {
        Mat<S> m = std::move(work.front());
        work.pop_front();
        if (!basis.add(m.a)) continue;
        for (const auto& g : gens) work.push_back(m * g);
        out.push_back(std::move(m));
    }
    return out;
}

using SparseVec = std::map<int, Rational>;

struct RadicalReport {
    int dim = 0;
    int gram_rank = 0;
    int radical_dim = 0;
    std::vector<std::vector<Rational>> radical_basis;
    RatMat gram;
};

// Radical of the trace form of left multiplication: gram[a][b] = tr(L_{x_a x_b}).
// mul(a, b) must return the product of basis elements a, b in coordinates.
RadicalReport trace_form_radical(int dim, const std::function<SparseVec(int, int)>& mul);

}  // namespace gbr
