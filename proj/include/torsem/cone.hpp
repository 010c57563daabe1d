#pragma once

// Rational polyhedral cones in canonical V-form: the stored generator list is
// a function of the cone as a set (primitive integer extreme rays of the
// pointed part, plus +/- pairs spanning the lineality space taken from the
// Hermite basis of its saturated lattice), so cones compare by ==.
//
// Every cone also carries the canonical generators of its dual, which makes
// membership tests, duals and face enumeration cheap afterwards.

#include "torsem/lattice.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace torsem {

// Canonical generator list of {x : <n, x> >= 0 for all n in normals}.
inline RatMat rays_of_hcone(const RatMat& normals_in, std::size_t d) {
    std::set<RatVec> normal_set;
    for (const auto& n : normals_in)
        if (!n.is_zero()) normal_set.insert(primitive(n));
    RatMat normals(normal_set.begin(), normal_set.end());

    std::set<RatVec> out;

    // Lineality: the saturated lattice orthogonal to all normals.
    IntMat nint(normals.size(), IntVec(d));
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) nint[i][j] = num(normals[i][j]);
    RatMat kernel_rows;
    for (const auto& row : integer_kernel(nint, d)) {
        RatVec v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = Rational(row[j]);
        kernel_rows.push_back(v);
    }
    Sublattice lineality = Sublattice::from_generators(d, kernel_rows);
    for (const auto& row : lineality.basis()) {
        out.insert(primitive(row));
        out.insert(-primitive(row));
    }
    if (normals.empty()) return {out.begin(), out.end()};

    // Pointed part: work in coordinates on span(normals).
    RatMat red = normals;
    rref(red);
    RatMat b;  // basis of span(normals)
    for (const auto& row : red)
        if (!row.is_zero()) b.push_back(row);
    std::size_t r = b.size();

    RatMat m(normals.size(), RatVec(r));  // constraints restricted to the span
    for (std::size_t j = 0; j < normals.size(); ++j)
        for (std::size_t k = 0; k < r; ++k) m[j][k] = dot(normals[j], b[k]);

    // Each extreme ray solves r-1 independent active constraints.
    std::vector<std::size_t> idx(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) idx[i] = i;
    while (true) {
        RatMat sub;
        for (auto i : idx) sub.push_back(m[i]);
        RatMat ns = nullspace(sub, r);
        if (ns.size() == 1) {
            for (int sign = 0; sign < 2; ++sign) {
                RatVec y = sign ? -ns[0] : ns[0];
                bool ok = true;
                for (const auto& row : m)
                    if (dot(row, y) < 0) { ok = false; break; }
                if (!ok) continue;
                RatVec v(d);
                for (std::size_t k = 0; k < r; ++k) v += y[k] * b[k];
                out.insert(primitive(v));
            }
        }
        // Next (r-1)-subset of the constraint rows, lexicographically.
        if (idx.empty()) break;
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == normals.size() - (idx.size() - (k - 1))) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
    return {out.begin(), out.end()};
}

class Cone {
public:
    Cone() = default;

    static Cone from_generators(std::size_t dim, const RatMat& gens) {
        Cone c;
        c.dim_ = dim;
        c.dual_rays_ = rays_of_hcone(gens, dim);
        c.rays_ = rays_of_hcone(c.dual_rays_, dim);
        return c;
    }

    static Cone from_inequalities(std::size_t dim, const RatMat& normals) {
        Cone c;
        c.dim_ = dim;
        c.rays_ = rays_of_hcone(normals, dim);
        c.dual_rays_ = rays_of_hcone(c.rays_, dim);
        return c;
    }

    static Cone positive_quadrant(std::size_t dim) {
        return from_generators(dim, identity_mat(dim));
    }

    std::size_t ambient_dim() const { return dim_; }
    const RatMat& rays() const { return rays_; }
    const RatMat& dual_rays() const { return dual_rays_; }

    bool operator==(const Cone& o) const { return dim_ == o.dim_ && rays_ == o.rays_; }
    bool operator<(const Cone& o) const { return rays_ < o.rays_; }

private:
    std::size_t dim_ = 0;
    RatMat rays_, dual_rays_;
};

inline Cone dual_cone(const Cone& c) {
    Cone d = Cone::from_inequalities(c.ambient_dim(), c.rays());
    return d;
}

inline std::size_t cone_dim(const Cone& c) { return rank(c.rays()); }

// strict = false: membership in the cone.
// strict = true: membership in the relative interior.
inline bool cone_contains(const Cone& c, const RatVec& v, bool strict = false) {
    std::set<RatVec> dual(c.dual_rays().begin(), c.dual_rays().end());
    for (const auto& w : c.dual_rays()) {
        Rational s = dot(w, v);
        if (s < 0) return false;
        if (strict) {
            // +/- paired normals cut out the span of c; unpaired ones cut out
            // proper faces, which the relative interior must avoid.
            bool paired = dual.count(-w) > 0;
            if (paired ? s != 0 : s == 0) return false;
        }
    }
    return true;
}

inline bool is_strictly_convex(const Cone& c) {
    std::set<RatVec> rays(c.rays().begin(), c.rays().end());
    for (const auto& r : c.rays())
        if (rays.count(-r)) return false;
    return true;
}

inline Cone cone_intersection(const Cone& a, const Cone& b) {
    RatMat normals = a.dual_rays();
    normals.insert(normals.end(), b.dual_rays().begin(), b.dual_rays().end());
    return Cone::from_inequalities(a.ambient_dim(), normals);
}

// All faces of c, including c itself and its minimal face, sorted by
// dimension then by canonical ray list.
inline std::vector<Cone> faces_of_cone(const Cone& c) {
    const RatMat& dr = c.dual_rays();
    if (dr.size() > 16)
        throw DomainError("DimensionTooLarge", "faces_of_cone: too many facets to enumerate");
    std::set<RatMat> seen;
    std::vector<Cone> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << dr.size()); ++mask) {
        RatMat normals = dr;
        for (std::size_t i = 0; i < dr.size(); ++i)
            if (mask & (std::size_t(1) << i)) normals.push_back(-dr[i]);
        Cone f = Cone::from_inequalities(c.ambient_dim(), normals);
        if (seen.insert(f.rays()).second) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const Cone& x, const Cone& y) {
        std::size_t dx = cone_dim(x), dy = cone_dim(y);
        return dx != dy ? dx < dy : x.rays() < y.rays();
    });
    return out;
}

}  // namespace torsem
