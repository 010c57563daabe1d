#pragma once

// Quasi-ordinary data: Weierstrass polynomials with series coefficients,
// resultant-based discriminants, the monomial-discriminant test, extraction
// of characteristic exponents from a fractional branch, the lattice tower
// with its inclusion indices, the gamma recursion and its semigroup, and
// semiroot values built from conjugate products.

#include "torsem/semigroup.hpp"
#include "torsem/series.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torsem {

// Monic polynomial in an extra variable Y over series in X: the coefficient
// of Y^k is coeffs[k] for k < degree, the leading coefficient is 1. Every
// coefficient must have integer exponents and vanish at the origin.
class WeierstrassPolynomial {
public:
    static WeierstrassPolynomial make(std::size_t dim, std::vector<Series> coeffs) {
        if (coeffs.empty()) throw ParseError("weierstrass polynomial must have positive degree");
        for (const auto& c : coeffs) {
            if (c.dim() != dim) throw ParseError("weierstrass coefficient has wrong dimension");
            if (c.denominator() != 1)
                throw ParseError("weierstrass coefficient has a fractional exponent");
            if (c.terms().count(RatVec(dim)))
                throw ParseError("weierstrass coefficient does not vanish at the origin");
        }
        WeierstrassPolynomial f;
        f.dim_ = dim;
        f.coeffs_ = std::move(coeffs);
        return f;
    }

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<Series>& coefficients() const { return coeffs_; }

    bool operator==(const WeierstrassPolynomial& o) const = default;

private:
    WeierstrassPolynomial() = default;

    std::size_t dim_ = 0;
    std::vector<Series> coeffs_;
};

inline Series evaluate(const WeierstrassPolynomial& f, const Series& y) {
    if (y.dim() != f.dim()) throw ParseError("evaluate: series has wrong dimension");
    Series r = Series::constant(f.dim(), Cyclo(1L));
    for (std::size_t k = f.degree(); k-- > 0;) r = r * y + f.coefficients()[k];
    return r;
}

namespace detail {

// Determinant over the series ring by dynamic programming on column subsets.
// Exact zeros are skipped; truncated entries participate so the truncation
// order of the result stays honest.
inline Series series_determinant(const std::vector<std::vector<Series>>& a, std::size_t dim) {
    std::size_t n = a.size();
    if (n == 0) return Series::constant(dim, Cyclo(1L));
    if (n > 17)
        throw DomainError("DimensionTooLarge", "series determinant of order " +
                                                   std::to_string(n) +
                                                   " exceeds the desk-scale bound");
    std::map<std::uint32_t, Series> cur;
    cur.emplace(0u, Series::constant(dim, Cyclo(1L)));
    for (std::size_t r = 0; r < n; ++r) {
        std::map<std::uint32_t, Series> next;
        for (const auto& [mask, val] : cur) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const Series& e = a[r][c];
                if (e.is_zero()) continue;
                Series term = val * e;
                // parity of inversions added by assigning column c to row r
                if (std::popcount(mask >> (c + 1)) & 1) term = -term;
                auto [it, fresh] = next.try_emplace(mask | (1u << c), term);
                if (!fresh) it->second = it->second + term;
            }
        }
        cur = std::move(next);
    }
    return cur.empty() ? Series::zero(dim) : cur.begin()->second;
}

}  // namespace detail

// Resultant of f and its Y-derivative as the raw Sylvester determinant.
inline Series discriminant(const WeierstrassPolynomial& f) {
    std::size_t n = f.degree(), d = f.dim();
    if (n < 2) throw ParseError("discriminant: polynomial degree must be at least 2");
    std::vector<Series> fc = f.coefficients();          // fc[k], k = 0..n with fc[n] = 1
    fc.push_back(Series::constant(d, Cyclo(1L)));
    std::vector<Series> gc;                             // derivative, gc[k] for k = 0..n-1
    for (std::size_t k = 0; k < n; ++k) gc.push_back(Cyclo(static_cast<long>(k + 1)) * fc[k + 1]);

    std::size_t m = n - 1, size = n + m;
    std::vector<std::vector<Series>> syl(size, std::vector<Series>(size, Series::zero(d)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t <= n; ++t) syl[i][i + t] = fc[n - t];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t <= m; ++t) syl[m + j][j + t] = gc[m - t];
    return detail::series_determinant(syl, d);
}

// The discriminant-is-a-monomial-times-a-unit test. Returns the exponent of
// the monomial when it exists, nullopt when the discriminant certifiably has
// two incomparable minimal exponents.
inline std::optional<RatVec> is_quasi_ordinary(const WeierstrassPolynomial& f) {
    Series disc = discriminant(f);
    if (disc.is_zero())
        throw DomainError("ZeroDiscriminant",
                          "is_quasi_ordinary: the discriminant vanishes identically");
    return monomial_times_unit(disc);
}

// Characteristic exponents of a fractional branch: repeatedly adjoin the
// smallest support exponent (by total order, ties broken lexicographically)
// that the current lattice misses, until the lattice swallows the support.
// The extracted sequence must be coordinatewise nondecreasing. The stored
// support must contain every characteristic exponent; a truncated series is
// accepted only when the caller asserts that via trust_truncation.
inline std::vector<RatVec> characteristic_exponents(const Series& zeta,
                                                    bool trust_truncation = false) {
    if (!zeta.is_exact() && !trust_truncation)
        throw DomainError("TruncationTooCoarse",
                          "characteristic_exponents: truncated branch needs the caller to assert "
                          "that all characteristic exponents are stored");
    std::size_t d = zeta.dim();
    auto support = zeta.support();
    std::vector<RatVec> lambdas;
    Sublattice m = Sublattice::standard(d);
    while (true) {
        const RatVec* best = nullptr;
        for (const auto& u : support) {
            if (m.contains(u)) continue;
            if (!best || total(u) < total(*best) ||
                (total(u) == total(*best) && u < *best))
                best = &u;
        }
        if (!best) break;
        lambdas.push_back(*best);
        RatMat gens = m.basis();
        gens.push_back(*best);
        m = Sublattice::from_generators(d, gens);
    }
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i)
        if (!lambdas[i].dominated_by(lambdas[i + 1]))
            throw DomainError("NotQuasiOrdinary",
                              "characteristic_exponents: extracted exponents " +
                                  to_string(lambdas[i]) + " and " + to_string(lambdas[i + 1]) +
                                  " are not coordinatewise comparable");
    return lambdas;
}

// The full tower attached to a characteristic sequence.
struct CharacteristicData {
    std::vector<RatVec> exponents;     // lambda_1 .. lambda_g
    std::vector<Sublattice> lattices;  // M_0 = Z^d, M_1, ..., M_g
    std::vector<Integer> indices;      // n_j = [M_j : M_{j-1}], all >= 2
    std::vector<RatVec> gammas;        // gamma_1 = lambda_1, recursion below
    AffineSemigroup gamma_semigroup;   // N^d + sum_j gamma_j N

    bool operator==(const CharacteristicData& o) const = default;
};

// Builds M_j = Z^d + Z lambda_1 + ... + Z lambda_j, the indices n_j, the
// vectors gamma_{j+1} = n_j gamma_j + lambda_{j+1} - lambda_j, and the
// semigroup generated by the unit vectors together with the gammas.
inline CharacteristicData lattice_tower(std::size_t dim, const std::vector<RatVec>& lambdas) {
    for (const auto& l : lambdas)
        if (l.dim() != dim) throw ParseError("lattice_tower: exponent has wrong dimension");
    if (!lambdas.empty() && !lambdas.front().is_nonnegative())
        throw DomainError("NotQuasiOrdinary", "lattice_tower: exponents must be nonnegative");
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i)
        if (!lambdas[i].dominated_by(lambdas[i + 1]))
            throw DomainError("NotQuasiOrdinary",
                              "lattice_tower: exponents are not coordinatewise nondecreasing");

    std::vector<Sublattice> lattices{Sublattice::standard(dim)};
    std::vector<Integer> indices;
    for (const auto& l : lambdas) {
        RatMat gens = lattices.back().basis();
        gens.push_back(l);
        Sublattice next = Sublattice::from_generators(dim, gens);
        Integer n = lattice_index(lattices.back(), next);
        if (n < 2)
            throw DomainError("DegenerateExponent",
                              "lattice_tower: exponent " + to_string(l) +
                                  " already lies in the previous lattice");
        lattices.push_back(next);
        indices.push_back(n);
    }

    std::vector<RatVec> gammas;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i == 0)
            gammas.push_back(lambdas[0]);
        else
            gammas.push_back(Rational(indices[i - 1]) * gammas[i - 1] + lambdas[i] -
                             lambdas[i - 1]);
    }

    RatMat gens;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVec e(dim);
        e[i] = 1;
        gens.push_back(e);
    }
    for (const auto& g : gammas) gens.push_back(g);
    AffineSemigroup gamma = AffineSemigroup::from_generators(dim, gens);

    for (const auto& g : gammas)
        if (!g.is_nonnegative() || !lattices.back().contains(g))
            throw std::logic_error("lattice_tower: gamma escapes the cone or the top lattice");

    return CharacteristicData{lambdas, std::move(lattices), std::move(indices),
                              std::move(gammas), std::move(gamma)};
}

// A fractional branch validated at construction: finite nonnegative support,
// no constant term, and a coordinatewise totally ordered characteristic
// sequence. Carries its tower.
class QuasiOrdinaryBranch {
public:
    static QuasiOrdinaryBranch make(const Series& zeta, bool trust_truncation = false) {
        if (zeta.terms().count(RatVec(zeta.dim())))
            throw DomainError("NotQuasiOrdinary", "branch has a nonzero constant term");
        auto lambdas = characteristic_exponents(zeta, trust_truncation);
        return QuasiOrdinaryBranch(zeta, lattice_tower(zeta.dim(), lambdas));
    }

    std::size_t dim() const { return series_.dim(); }
    const Series& series() const { return series_; }
    const Integer& denominator() const { return series_.denominator(); }
    const CharacteristicData& data() const { return data_; }
    std::size_t tower_length() const { return data_.exponents.size(); }  // g

    bool operator==(const QuasiOrdinaryBranch& o) const = default;

private:
    QuasiOrdinaryBranch(Series zeta, CharacteristicData data)
        : series_(std::move(zeta)), data_(std::move(data)) {}

    Series series_;
    CharacteristicData data_;
};

// Sub-series of the branch keeping the terms whose exponents lie in M_{j-1};
// indices past the tower clamp to the top lattice, which swallows the branch.
inline Series truncated_branch(const QuasiOrdinaryBranch& zeta, std::size_t j) {
    if (j < 1) throw ParseError("truncated_branch: index must be at least 1");
    const auto& lattices = zeta.data().lattices;
    const Sublattice& m = lattices[std::min(j - 1, lattices.size() - 1)];
    std::map<RatVec, Cyclo> kept;
    for (const auto& [u, c] : zeta.series().terms())
        if (m.contains(u)) kept.emplace(u, c);
    return Series::make(zeta.dim(), std::move(kept), zeta.series().trunc());
}

// q_j = product of (zeta - tau) over the conjugates tau of the j-th truncated
// branch. The factor count is n_1 * ... * n_{j-1}, and no factor vanishes
// because the truncation drops the j-th characteristic term of zeta.
inline Series semiroot_value(const QuasiOrdinaryBranch& zeta, std::size_t j) {
    if (j < 1 || j > zeta.tower_length())
        throw ParseError("semiroot_value: index out of range");
    Series tr = truncated_branch(zeta, j);
    auto taus = conjugates(tr);

    Integer expected = 1;
    for (std::size_t i = 0; i + 1 < j; ++i) expected *= zeta.data().indices[i];
    if (Integer(taus.size()) != expected)
        throw std::logic_error("semiroot_value: conjugate count differs from the lattice index");

    Series q = Series::constant(zeta.dim(), Cyclo(1L));
    for (const auto& tau : taus) q = q * (zeta.series() - tau);
    if (!q.is_exact() && q.terms().empty())
        throw DomainError("TruncationTooCoarse",
                          "semiroot_value: no terms certified below the truncation order");
    return q;
}

// The monic polynomial with the conjugates of the branch as roots. All
// coefficients must come out with integer exponents and rational
// coefficients; the degree equals the product of the tower indices.
inline WeierstrassPolynomial branch_polynomial(const QuasiOrdinaryBranch& zeta) {
    Integer deg = 1;
    for (const auto& n : zeta.data().indices) deg *= n;
    if (deg > 16)
        throw DomainError("DimensionTooLarge", "branch_polynomial: degree " + deg.str() +
                                                   " exceeds the desk-scale bound of 16");
    auto taus = conjugates(zeta.series());
    if (Integer(taus.size()) != deg)
        throw std::logic_error("branch_polynomial: conjugate count differs from the tower index");

    std::size_t d = zeta.dim();
    std::vector<Series> coeffs{Series::constant(d, Cyclo(1L))};
    for (const auto& tau : taus) {
        std::vector<Series> next(coeffs.size() + 1, Series::zero(d));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = next[k + 1] + coeffs[k];
            next[k] = next[k] - tau * coeffs[k];
        }
        coeffs = std::move(next);
    }
    coeffs.pop_back();  // the leading 1
    for (const auto& c : coeffs) {
        if (c.denominator() != 1)
            throw DomainError("NotGaloisStable",
                              "branch_polynomial: a coefficient has a fractional exponent");
        for (const auto& [u, coeff] : c.terms())
            if (!coeff.is_rational())
                throw DomainError("NotGaloisStable",
                                  "branch_polynomial: a coefficient is not rational");
    }
    return WeierstrassPolynomial::make(d, std::move(coeffs));
}

}  // namespace torsem
