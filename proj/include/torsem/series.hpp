#pragma once

// Finite fractional power series: exact term maps over cyclotomic
// coefficients, with an optional truncation order T recording that all terms
// of total order < T are stored and nothing is known beyond. Every operation
// tracks the truncation honestly; geometric queries (Newton polyhedron,
// restrictions, valuations) either certify their answer from the stored part
// or refuse with TruncationTooCoarse.

#include "torsem/cyclotomic.hpp"
#include "torsem/newton.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace torsem {

class Series {
public:
    static Series zero(std::size_t dim) { return Series(dim, {}, std::nullopt); }

    static Series monomial(std::size_t dim, const RatVec& u, const Cyclo& c = Cyclo(1L)) {
        std::map<RatVec, Cyclo> t;
        t.emplace(u, c);
        return Series(dim, std::move(t), std::nullopt);
    }

    static Series constant(std::size_t dim, const Cyclo& c) {
        return monomial(dim, RatVec(dim), c);
    }

    // Validating factory for externally supplied data.
    static Series make(std::size_t dim, std::map<RatVec, Cyclo> terms,
                       std::optional<Rational> trunc) {
        for (const auto& [u, c] : terms) {
            if (u.dim() != dim) throw ParseError("series term has wrong exponent dimension");
            if (!u.is_nonnegative()) throw ParseError("series exponent has a negative coordinate");
        }
        if (trunc && *trunc <= 0) throw ParseError("series truncation order must be positive");
        return Series(dim, std::move(terms), std::move(trunc));
    }

    std::size_t dim() const { return dim_; }
    const std::map<RatVec, Cyclo>& terms() const { return terms_; }
    const std::optional<Rational>& trunc() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    const Integer& denominator() const { return m_; }

    bool is_zero() const { return terms_.empty() && is_exact(); }

    std::vector<RatVec> support() const {
        std::vector<RatVec> s;
        for (const auto& [u, c] : terms_) s.push_back(u);
        return s;
    }

    // Lower bound for the order of any term, stored or unknown. Stored terms
    // always sit below the truncation order, so their minimum is exact.
    Rational order_lower_bound() const {
        if (!terms_.empty()) return stored_min_total();
        return trunc_ ? *trunc_ : Rational(0);
    }

    friend Series operator+(const Series& a, const Series& b) {
        auto trunc = min_trunc(a.trunc_, b.trunc_);
        std::map<RatVec, Cyclo> t = a.terms_;
        for (const auto& [u, c] : b.terms_) {
            auto it = t.find(u);
            if (it == t.end())
                t.emplace(u, c);
            else
                it->second = it->second + c;
        }
        return Series(a.dim_, std::move(t), std::move(trunc));
    }

    friend Series operator-(const Series& a) {
        std::map<RatVec, Cyclo> t;
        for (const auto& [u, c] : a.terms_) t.emplace(u, -c);
        return Series(a.dim_, std::move(t), a.trunc_);
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.dim_);
        std::optional<Rational> trunc;
        if (a.trunc_) trunc = *a.trunc_ + b.order_lower_bound();
        if (b.trunc_) {
            Rational t2 = *b.trunc_ + a.order_lower_bound();
            if (!trunc || t2 < *trunc) trunc = t2;
        }
        std::map<RatVec, Cyclo> t;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                RatVec w = u + v;
                Cyclo c = cu * cv;
                auto it = t.find(w);
                if (it == t.end())
                    t.emplace(std::move(w), std::move(c));
                else
                    it->second = it->second + c;
            }
        return Series(a.dim_, std::move(t), std::move(trunc));
    }

    friend Series operator*(const Cyclo& c, const Series& a) {
        std::map<RatVec, Cyclo> t;
        for (const auto& [u, cu] : a.terms_) t.emplace(u, c * cu);
        return Series(a.dim_, std::move(t), a.trunc_);
    }

    bool operator==(const Series& o) const = default;

private:
    Series(std::size_t dim, std::map<RatVec, Cyclo> terms, std::optional<Rational> trunc)
        : dim_(dim), terms_(std::move(terms)), trunc_(std::move(trunc)) {
        normalize();
    }

    Rational stored_min_total() const {
        Rational best;
        bool first = true;
        for (const auto& [u, c] : terms_) {
            Rational t = total(u);
            if (first || t < best) { best = t; first = false; }
        }
        return best;
    }

    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero() || (trunc_ && total(it->first) >= *trunc_))
                it = terms_.erase(it);
            else
                ++it;
        }
        m_ = 1;
        for (const auto& [u, c] : terms_) m_ = lcm(m_, common_denominator(u));
    }

    static std::optional<Rational> min_trunc(const std::optional<Rational>& a,
                                             const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    std::size_t dim_;
    std::map<RatVec, Cyclo> terms_;
    std::optional<Rational> trunc_;
    Integer m_ = 1;
};

inline Series pow(const Series& s, unsigned long k) {
    Series r = Series::constant(s.dim(), Cyclo(1L));
    for (unsigned long i = 0; i < k; ++i) r = r * s;
    return r;
}

// Forgets knowledge beyond total order t.
inline Series truncate(const Series& s, const Rational& t) {
    std::optional<Rational> nt = s.trunc() && *s.trunc() < t ? *s.trunc() : t;
    return Series::make(s.dim(), s.terms(), nt);
}

namespace detail {

inline void require_nonempty(const Series& s, const char* op) {
    if (!s.terms().empty()) return;
    if (s.is_exact())
        throw DomainError("ZeroSeries", std::string(op) + ": series is identically zero");
    throw DomainError("TruncationTooCoarse",
                      std::string(op) + ": no terms stored below the truncation order");
}

// True when every exponent hidden beyond the truncation order is dominated
// coordinatewise by a stored one, so support-based geometry is exact.
inline bool support_certified(const Series& s) {
    if (s.is_exact()) return true;
    auto b = escape_bound(s.support());
    if (b.empty) return true;
    if (b.unbounded) return false;
    return b.value <= *s.trunc();
}

}  // namespace detail

// Newton polyhedron of the series: convex hull of the support plus the
// positive quadrant. Requires the truncated support to pin it down.
inline Polyhedron newton_polyhedron(const Series& s) {
    detail::require_nonempty(s, "newton_polyhedron");
    if (!detail::support_certified(s))
        throw DomainError("TruncationTooCoarse",
                          "newton_polyhedron: terms beyond the truncation order could add vertices");
    return polyhedron_from_support(s.support(), Cone::positive_quadrant(s.dim()));
}

namespace detail {

// Minimal order of s against the weight eta, certified against truncation.
// strict_frontier controls whether ties with hidden terms are acceptable:
// the face polynomial needs strictness, the bare valuation does not.
inline Rational weighted_min(const Series& s, const RatVec& eta, bool strict_frontier,
                             const char* op) {
    if (eta.dim() != s.dim())
        throw DomainError("RankMismatch", std::string(op) + ": weight has wrong dimension");
    // Exact series have a complete support, so any nonnegative weight has a
    // well-defined minimum; certifying against a truncation additionally needs
    // every coordinate strictly positive, or hidden terms could grade lower.
    for (std::size_t i = 0; i < eta.dim(); ++i)
        if (eta[i] < 0 || (!s.is_exact() && eta[i] == 0))
            throw DomainError("BoundaryWeight",
                              std::string(op) + ": weight must be interior to the positive quadrant");
    require_nonempty(s, op);
    Rational best;
    bool first = true;
    for (const auto& [u, c] : s.terms()) {
        Rational v = dot(eta, u);
        if (first || v < best) { best = v; first = false; }
    }
    if (!s.is_exact()) {
        Rational eta_min = eta[0];
        for (std::size_t i = 1; i < eta.dim(); ++i)
            if (eta[i] < eta_min) eta_min = eta[i];
        Rational frontier = eta_min * *s.trunc();  // any hidden term has value >= this
        bool ok = strict_frontier ? best < frontier : best <= frontier;
        if (!ok)
            throw DomainError("TruncationTooCoarse",
                              std::string(op) + ": stored terms do not reach below the truncation frontier");
    }
    return best;
}

}  // namespace detail

// The terms of minimal weight: the symbolic restriction of the series to the
// exceptional divisor with weight vector eta. Exact by construction.
inline Series symbolic_restriction(const Series& s, const RatVec& eta) {
    Rational best = detail::weighted_min(s, eta, /*strict_frontier=*/true, "symbolic_restriction");
    std::map<RatVec, Cyclo> t;
    for (const auto& [u, c] : s.terms())
        if (dot(eta, u) == best) t.emplace(u, c);
    return Series::make(s.dim(), std::move(t), std::nullopt);
}

// Decides whether s = X^u * (unit), returning u. A "no" answer is always
// certified; a "yes" with finite truncation requires the stored support to
// dominate every hidden exponent.
inline std::optional<RatVec> monomial_times_unit(const Series& s) {
    detail::require_nonempty(s, "monomial_times_unit");
    std::vector<RatVec> minimal;
    for (const auto& [u, c] : s.terms()) {
        bool is_min = true;
        for (const auto& [v, cv] : s.terms())
            if (!(v == u) && v.dominated_by(u)) { is_min = false; break; }
        if (is_min) minimal.push_back(u);
    }
    if (minimal.size() >= 2) return std::nullopt;  // two incomparable minimal exponents
    const RatVec& v = minimal[0];
    if (!s.is_exact()) {
        auto b = escape_bound({v});
        bool sound = b.empty || (!b.unbounded && b.value <= *s.trunc());
        if (!sound)
            throw DomainError("TruncationTooCoarse",
                              "monomial_times_unit: a hidden term could escape the candidate monomial");
    }
    return v;
}

// All images of s under the substitutions X_i^(1/m_i) -> zeta_i X_i^(1/m_i),
// where m_i is the lcm of the denominators appearing in coordinate i.
// Duplicates are removed; the result keeps enumeration order and always
// contains s itself first.
inline std::vector<Series> conjugates(const Series& s) {
    std::size_t d = s.dim();
    std::vector<long> mi(d, 1);
    for (const auto& [u, c] : s.terms())
        for (std::size_t i = 0; i < d; ++i)
            mi[i] = static_cast<long>(lcm(Integer(mi[i]), den(u[i])));

    std::vector<Series> out;
    std::vector<long> k(d, 0);
    while (true) {
        std::map<RatVec, Cyclo> t;
        for (const auto& [u, c] : s.terms()) {
            Cyclo factor(1L);
            for (std::size_t i = 0; i < d; ++i) {
                Integer e = (Integer(k[i]) * num(u[i] * mi[i])) % mi[i];
                factor = factor * Cyclo::root_of_unity(static_cast<unsigned long>(mi[i]),
                                                       static_cast<long>(e));
            }
            t.emplace(u, factor * c);
        }
        Series img = Series::make(d, std::move(t), s.trunc());
        bool seen = false;
        for (const auto& prev : out)
            if (prev == img) { seen = true; break; }
        if (!seen) out.push_back(std::move(img));

        std::size_t i = d;
        while (i > 0 && k[i - 1] == mi[i - 1] - 1) k[--i] = 0;
        if (i == 0) break;
        ++k[i - 1];
    }
    return out;
}

}  // namespace torsem
