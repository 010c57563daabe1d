#pragma once

// Lattices of finite rank inside Q^d: Hermite normal form, canonical bases,
// membership, inclusion indices and duals. A lattice here may have fractional
// coordinates (e.g. Z^d + Z*(1/2,1/2)); its basis is stored in a canonical
// form so that equal lattices compare equal structurally.

#include "torsem/errors.hpp"
#include "torsem/matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace torsem {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

struct HnfResult {
    IntMat h;  // row-style Hermite normal form, zero rows at the bottom
    IntMat u;  // unimodular, h = u * input
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot), pivot columns strictly increasing. The nonzero rows are the
// canonical basis of the row lattice.
inline HnfResult hermite_normal_form(const IntMat& a) {
    IntMat h = a;
    std::size_t rows = h.size();
    std::size_t cols = rows ? h[0].size() : 0;
    IntMat u(rows, IntVec(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto row_sub = [&](std::size_t i, const Integer& q, std::size_t r) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Gcd elimination below row r in column c.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 && (best == rows || iabs(h[i][c]) < iabs(h[best][c]))) best = i;
            if (best == rows) break;
            if (best != r) {
                std::swap(h[best], h[r]);
                std::swap(u[best], u[r]);
            }
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                row_sub(i, floor_div(h[i][c], h[r][c]), r);
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (auto& x : h[r]) x = -x;
            for (auto& x : u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) row_sub(i, floor_div(h[i][c], h[r][c]), r);
        ++r;
    }
    return {std::move(h), std::move(u)};
}

// Basis of the saturated lattice {x in Z^d : <row, x> = 0 for all rows of m}.
inline IntMat integer_kernel(const IntMat& m, std::size_t d) {
    IntMat at(d, IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) at[j][i] = m[i][j];
    auto [h, u] = hermite_normal_form(at);
    IntMat kernel;
    for (std::size_t i = 0; i < d; ++i) {
        bool zero = true;
        for (const auto& x : h[i])
            if (x != 0) { zero = false; break; }
        if (zero) kernel.push_back(u[i]);
    }
    return kernel;
}

class Sublattice {
public:
    // The zero lattice in ambient dimension `dim`.
    explicit Sublattice(std::size_t dim) : dim_(dim) {}

    static Sublattice standard(std::size_t dim) {
        Sublattice l(dim);
        l.basis_ = identity_mat(dim);
        return l;
    }

    static Sublattice from_generators(std::size_t dim, const RatMat& gens) {
        Integer scale = 1;
        for (const auto& g : gens) scale = lcm(scale, common_denominator(g));
        IntMat a(gens.size(), IntVec(dim));
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) a[i][j] = num(gens[i][j] * scale);
        auto h = hermite_normal_form(a).h;
        Sublattice l(dim);
        for (const auto& row : h) {
            RatVec v(dim);
            bool zero = true;
            for (std::size_t j = 0; j < dim; ++j) {
                v[j] = Rational(row[j], scale);
                if (row[j] != 0) zero = false;
            }
            if (!zero) l.basis_.push_back(v);
        }
        return l;
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const RatMat& basis() const { return basis_; }

    bool operator==(const Sublattice& o) const = default;

    // Rational coordinates of v in this basis, or nullopt if v is off-span.
    std::optional<RatVec> coordinates(const RatVec& v) const { return solve_left(basis_, v); }

    bool contains(const RatVec& v) const {
        auto x = coordinates(v);
        return x && x->is_integral();
    }

private:
    std::size_t dim_;
    RatMat basis_;  // canonical: HNF rows of the scaled integer basis, rescaled back
};

inline bool lattice_member(const RatVec& v, const Sublattice& l) { return l.contains(v); }

// Index [sup : sub] of a finite-index inclusion of lattices.
inline Integer lattice_index(const Sublattice& sub, const Sublattice& sup) {
    if (sub.dim() != sup.dim() || sub.rank() != sup.rank())
        throw DomainError("RankMismatch", "lattice_index: lattices have different rank");
    RatMat x;
    for (const auto& row : sub.basis()) {
        auto c = sup.coordinates(row);
        if (!c || !c->is_integral())
            throw DomainError("NotASublattice", "lattice_index: first lattice is not contained in second");
        x.push_back(*c);
    }
    Rational d = det(x);
    Integer n = num(d);
    return iabs(n);
}

// Shortest positive multiple of v lying in l, primitive there. Requires the
// direction to meet the lattice span.
inline RatVec primitive_in_lattice(const RatVec& v, const Sublattice& l) {
    auto x = l.coordinates(v);
    if (!x)
        throw DomainError("RankMismatch", "primitive_in_lattice: vector is off the lattice span");
    RatVec y = primitive(*x);
    RatVec out(v.dim());
    for (std::size_t i = 0; i < y.dim(); ++i) out += y[i] * l.basis()[i];
    return out;
}

// Dual lattice {w : <w, v> in Z for all v in l}; needs full rank.
inline Sublattice dual_lattice(const Sublattice& l) {
    if (l.rank() != l.dim())
        throw DomainError("RankMismatch", "dual_lattice: lattice is not full rank");
    auto inv = inverse(l.basis());
    return Sublattice::from_generators(l.dim(), transpose(*inv));
}

}  // namespace torsem
