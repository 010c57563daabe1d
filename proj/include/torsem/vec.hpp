#pragma once

// Dense exact rational vectors. These are small (ambient dimension <= 4 in
// practice) so everything is by-value and allocation cost is irrelevant.

#include "torsem/errors.hpp"
#include "torsem/numeric.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace torsem {

class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t dim) : c_(dim, Rational(0)) {}
    RatVec(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit RatVec(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool operator==(const RatVec& o) const = default;

    // Lexicographic order; used for canonical sorting and as map key order.
    bool operator<(const RatVec& o) const {
        return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
    }

    RatVec& operator+=(const RatVec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    RatVec& operator-=(const RatVec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    RatVec& operator*=(const Rational& t) {
        for (auto& x : c_) x *= t;
        return *this;
    }

    friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
    friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
    friend RatVec operator*(const Rational& t, RatVec a) { return a *= t; }
    friend RatVec operator-(RatVec a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
    }
    bool is_nonnegative() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x >= 0; });
    }

    // Coordinatewise <=, the divisibility order on monomial exponents.
    bool dominated_by(const RatVec& o) const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }

private:
    std::vector<Rational> c_;
};

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

// Sum of coordinates, the total order |u| used for truncation bookkeeping.
inline Rational total(const RatVec& u) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i];
    return s;
}

inline Integer common_denominator(const RatVec& u) {
    Integer m = 1;
    for (std::size_t i = 0; i < u.dim(); ++i) m = lcm(m, den(u[i]));
    return m;
}

// Smallest positive scalar multiple of v that is a primitive integer vector.
// Requires v != 0.
inline RatVec primitive(const RatVec& v) {
    if (v.is_zero()) throw DomainError("ZeroVector", "primitive: zero vector has no direction");
    Integer m = common_denominator(v);
    Integer g = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) g = gcd(g, num(v[i]) * (m / den(v[i])));
    g = iabs(g);
    RatVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] * Rational(m, g);
    return r;
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace torsem
