#pragma once

// Exact dense linear algebra over the rationals: Gauss-Jordan elimination and
// the handful of derived operations the lattice and cone code needs.
// Matrices are row vectors; sizes stay tiny, so clarity beats cleverness.

#include "torsem/vec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace torsem {

using RatMat = std::vector<RatVec>;

inline RatMat transpose(const RatMat& m) {
    if (m.empty()) return {};
    RatMat t(m[0].dim(), RatVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].dim(); ++j) t[j][i] = m[i][j];
    return t;
}

inline RatMat identity_mat(std::size_t n) {
    RatMat m(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].dim(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        m[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c] != 0) {
                Rational f = m[i][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }

inline Rational det(RatMat m) {
    std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline std::optional<RatMat> inverse(const RatMat& m) {
    std::size_t n = m.size();
    RatMat aug(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Solves x * m = v for a row vector x (v in the row space of m), i.e. writes v
// in terms of the rows of m. Returns nullopt when v is not in the row space.
inline std::optional<RatVec> solve_left(const RatMat& m, const RatVec& v) {
    if (m.empty()) return v.is_zero() ? std::optional<RatVec>(RatVec(0)) : std::nullopt;
    std::size_t rows = m.size(), cols = m[0].dim();
    // Augment columns of m^T with v^T and eliminate.
    RatMat aug(cols, RatVec(rows + 1));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) aug[j][i] = m[i][j];
    for (std::size_t j = 0; j < cols; ++j) aug[j][rows] = v[j];
    auto pivots = rref(aug);
    RatVec x(rows);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == rows) return std::nullopt;  // inconsistent system
        x[pivots[k]] = aug[k][rows];
    }
    return x;
}

// Basis of {x : m x = 0} as row vectors.
inline RatMat nullspace(RatMat m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(cols);
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -m[k][f];
        basis.push_back(x);
    }
    return basis;
}

inline RatVec mat_apply(const RatMat& m, const RatVec& v) {
    RatVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].dim();
    RatMat r(n, RatVec(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

}  // namespace torsem
