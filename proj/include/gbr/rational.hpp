#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace gbr {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", optional leading '-'.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{BigInt(s)};
            return r;
        }
        Rational r{BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))};
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Element of Q(sqrt(d)) for a fixed non-square d > 0. Values with b == 0 are
// plain rationals, so mixing with Rational inputs is safe for any d.
struct Quadratic {
    Rational a, b;
    long d = 5;

    Quadratic() = default;
    Quadratic(Rational x) : a(std::move(x)), b(0) {}
    Quadratic(Rational x, Rational y, long dd) : a(std::move(x)), b(std::move(y)), d(dd) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        return {x.a + y.a, x.b + y.b, x.b == 0 ? y.d : x.d};
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
        return {x.a - y.a, x.b - y.b, x.b == 0 ? y.d : x.d};
    }
    Quadratic operator-() const { return {-a, -b, d}; }
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        long dd = x.b == 0 ? y.d : x.d;
        return {x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd};
    }
    Quadratic inv() const {
        Rational n = a * a - b * b * d;
        if (n == 0) throw std::domain_error("Quadratic: not invertible");
        return {a / n, -b / n, d};
    }
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) { return x * y.inv(); }
    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
    Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
    Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
    Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }

    double approx() const { return a.get_d() + b.get_d() * std::sqrt((double)d); }
};

inline std::string quadratic_str(const Quadratic& q) {
    if (q.b == 0) return rational_str(q.a);
    return rational_str(q.a) + "+" + rational_str(q.b) + "*sqrt(" + std::to_string(q.d) + ")";
}

inline double scalar_approx(const Rational& x) { return x.get_d(); }
inline double scalar_approx(const Quadratic& x) { return x.approx(); }
inline double scalar_approx(double x) { return x; }

}  // namespace gbr
