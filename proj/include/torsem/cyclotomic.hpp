#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M). An element is stored by
// its coordinates in the power basis 1, x, ..., x^{phi(M)-1} of
// Q[x]/Phi_M(x). Elements of different levels are merged by embedding into
// the compositum Q(zeta_lcm); values that turn out rational collapse to
// level 1, so plain rationals always have a unique representation.

#include "torsem/errors.hpp"
#include "torsem/numeric.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

namespace torsem {

inline unsigned long totient(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Quotient of polynomials with exact division (used for x^M - 1 over the
// product of lower cyclotomics). Coefficients ascending.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return q;
}

inline std::vector<Integer> poly_mul_int(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace detail

// Coefficients (ascending) of the M-th cyclotomic polynomial, memoized.
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned long m) {
    static std::map<unsigned long, std::vector<Integer>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Integer> prod{Integer(1)};
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d) continue;
        if (auto it = cache.find(d); it != cache.end()) {
            prod = detail::poly_mul_int(prod, it->second);
        } else {
            // fill recursively; map iterators stay valid across inserts
            std::vector<Integer> xm1(d + 1, Integer(0));
            xm1[0] = -1;
            xm1[d] = 1;
            std::vector<Integer> sub{Integer(1)};
            for (unsigned long e = 1; e < d; ++e)
                if (d % e == 0) sub = detail::poly_mul_int(sub, cache.at(e));
            cache[d] = detail::poly_div_exact(xm1, sub);
            prod = detail::poly_mul_int(prod, cache[d]);
        }
    }
    std::vector<Integer> xm1(m + 1, Integer(0));
    xm1[0] = -1;
    xm1[m] = 1;
    return cache[m] = detail::poly_div_exact(xm1, prod);
}

class Cyclo {
public:
    Cyclo() : level_(1), coords_{Rational(0)} {}
    Cyclo(const Rational& r) : level_(1), coords_{r} {}
    Cyclo(long n) : level_(1), coords_{Rational(n)} {}

    // x^k in Q(zeta_m), i.e. the k-th power of a fixed primitive m-th root.
    static Cyclo root_of_unity(unsigned long m, long k) {
        long kk = k % static_cast<long>(m);
        if (kk < 0) kk += static_cast<long>(m);
        std::vector<Rational> poly(static_cast<std::size_t>(kk) + 1, Rational(0));
        poly.back() = 1;
        return from_polynomial(m, std::move(poly));
    }

    // Element with the given power-basis polynomial (any degree; reduced here).
    static Cyclo from_polynomial(unsigned long level, std::vector<Rational> poly) {
        Cyclo c;
        c.level_ = level;
        c.coords_ = reduce(level, std::move(poly));
        c.normalize();
        return c;
    }

    unsigned long level() const { return level_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const { return level_ == 1 && coords_[0] == 0; }
    bool is_rational() const { return level_ == 1; }
    const Rational& rational_value() const {
        if (!is_rational()) throw std::logic_error("Cyclo: value is not rational");
        return coords_[0];
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y, l] = merge(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return from_polynomial(l, std::move(x));
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y, l] = merge(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        return from_polynomial(l, std::move(x));
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y, l] = merge(a, b);
        std::vector<Rational> prod(x.size() + y.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
        }
        return from_polynomial(l, std::move(prod));
    }
    friend Cyclo operator-(const Cyclo& a) { return Cyclo(Rational(-1)) * a; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        auto [x, y, l] = merge(a, b);
        (void)l;
        return x == y;
    }

private:
    // Remainder mod Phi_level, padded to length phi(level).
    static std::vector<Rational> reduce(unsigned long level, std::vector<Rational> poly) {
        const auto& phi = cyclotomic_polynomial(level);
        std::size_t deg = phi.size() - 1;  // = totient(level)
        for (std::size_t k = poly.size(); k-- > deg;) {
            Rational c = poly[k];
            if (c == 0) continue;
            poly[k] = 0;
            for (std::size_t j = 0; j < deg; ++j) poly[k - deg + j] -= c * Rational(phi[j]);
        }
        poly.resize(deg == 0 ? 1 : deg, Rational(0));
        return poly;
    }

    // Common-level coordinates of a and b in Q(zeta_lcm).
    struct Merged {
        std::vector<Rational> a, b;
        unsigned long level;
    };
    static Merged merge(const Cyclo& x, const Cyclo& y) {
        unsigned long l = std::lcm(x.level_, y.level_);
        return {embed(x, l), embed(y, l), l};
    }
    static std::vector<Rational> embed(const Cyclo& c, unsigned long l) {
        unsigned long e = l / c.level_;
        if (e == 1) return c.coords_;
        std::vector<Rational> poly((c.coords_.size() - 1) * e + 1, Rational(0));
        for (std::size_t i = 0; i < c.coords_.size(); ++i) poly[i * e] = c.coords_[i];
        return reduce(l, std::move(poly));
    }

    void normalize() {
        bool rat = true;
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) { rat = false; break; }
        if (rat && level_ != 1) {
            coords_.resize(1);
            level_ = 1;
        }
    }

    unsigned long level_;
    std::vector<Rational> coords_;
};

inline std::string to_string(const Cyclo& c) {
    if (c.is_rational()) return to_string(c.rational_value());
    std::string s = "cyclo(" + std::to_string(c.level()) + ";";
    for (std::size_t i = 0; i < c.coords().size(); ++i) {
        if (i) s += ",";
        s += to_string(c.coords()[i]);
    }
    return s + ")";
}

}  // namespace torsem
