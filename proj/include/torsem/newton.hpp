#pragma once

// Newton polyhedra of finite supports, their faces, and the dual subdivision
// (normal fan) of a reference cone. Also the staircase escape bound used to
// decide whether a truncated series carries enough terms for these objects
// to be certified exact.

#include "torsem/cone.hpp"
#include "torsem/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace torsem {

struct Polyhedron {
    std::vector<RatVec> points;    // defining support, deduplicated and sorted
    Cone recession;                // pointed recession cone
    std::vector<RatVec> vertices;  // vertices of conv(points) + recession
};

// conv(points) + recession. The recession cone must be pointed, otherwise the
// polyhedron has no vertices and none of the downstream machinery applies.
inline Polyhedron polyhedron_from_support(std::vector<RatVec> points, const Cone& recession) {
    if (points.empty())
        throw DomainError("EmptySupport", "polyhedron_from_support: no support points");
    if (!is_strictly_convex(recession))
        throw DomainError("NoVertex", "polyhedron_from_support: recession cone contains a line");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::size_t d = points[0].dim();
    const RatMat& rays = recession.rays();
    Polyhedron p{points, recession, {}};
    for (std::size_t k = 0; k < points.size(); ++k) {
        // points[k] is a vertex iff it is not in conv(the others) + recession.
        RatMat a(d + 1, RatVec((points.size() - 1) + rays.size()));
        RatVec b(d + 1);
        std::size_t col = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == k) continue;
            for (std::size_t row = 0; row < d; ++row) a[row][col] = points[i][row];
            a[d][col] = 1;
            ++col;
        }
        for (std::size_t j = 0; j < rays.size(); ++j, ++col)
            for (std::size_t row = 0; row < d; ++row) a[row][col] = rays[j][row];
        for (std::size_t row = 0; row < d; ++row) b[row] = points[k][row];
        b[d] = 1;
        if (!lp_feasible(a, b)) p.vertices.push_back(points[k]);
    }
    return p;
}

// Support points minimizing <eta, .>, i.e. the points lying on the face of
// the polyhedron in direction eta.
inline std::vector<RatVec> face_of(const Polyhedron& p, const RatVec& eta) {
    for (const auto& r : p.recession.rays())
        if (dot(eta, r) < 0)
            throw DomainError("UnboundedDirection",
                              "face_of: functional is unbounded below on the polyhedron");
    Rational best;
    bool first = true;
    for (const auto& q : p.points) {
        Rational v = dot(eta, q);
        if (first || v < best) { best = v; first = false; }
    }
    std::vector<RatVec> face;
    for (const auto& q : p.points)
        if (dot(eta, q) == best) face.push_back(q);
    return face;
}

struct Fan {
    std::vector<Cone> cones;  // all faces of all maximal cones, sorted, unique
};

inline std::vector<Cone> maximal_cones(const Fan& fan, std::size_t dim) {
    std::vector<Cone> out;
    for (const auto& c : fan.cones)
        if (cone_dim(c) == dim) out.push_back(c);
    return out;
}

// Internal consistency check: cones closed under faces, pairwise intersections
// are common faces, and the maximal cones tile `support` (every ridge of a
// maximal cone is shared by exactly two of them or lies on the boundary).
inline bool is_valid_fan(const Fan& fan, const Cone& support) {
    std::size_t d = support.ambient_dim();
    std::set<RatMat> members;
    for (const auto& c : fan.cones) members.insert(c.rays());
    for (const auto& c : fan.cones) {
        for (const auto& f : faces_of_cone(c))
            if (!members.count(f.rays())) return false;
        for (const auto& r : c.rays())
            if (!cone_contains(support, r)) return false;
    }
    for (std::size_t i = 0; i < fan.cones.size(); ++i)
        for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
            Cone meet = cone_intersection(fan.cones[i], fan.cones[j]);
            if (!members.count(meet.rays())) return false;
            auto is_face_of = [&](const Cone& big) {
                for (const auto& f : faces_of_cone(big))
                    if (f.rays() == meet.rays()) return true;
                return false;
            };
            if (!is_face_of(fan.cones[i]) || !is_face_of(fan.cones[j])) return false;
        }
    auto maxi = maximal_cones(fan, d);
    if (maxi.empty()) return false;
    for (const auto& c : maxi) {
        for (const auto& f : faces_of_cone(c)) {
            if (cone_dim(f) + 1 != d) continue;
            std::size_t shared = 0;
            for (const auto& other : maxi) {
                bool inside = true;
                for (const auto& r : f.rays())
                    if (!cone_contains(other, r)) { inside = false; break; }
                if (inside) ++shared;
            }
            if (shared == 1) {
                // Unshared ridges must lie on a facet of the support cone.
                bool on_boundary = false;
                for (const auto& w : support.dual_rays()) {
                    bool flat = true;
                    for (const auto& r : f.rays())
                        if (dot(w, r) != 0) { flat = false; break; }
                    if (flat) { on_boundary = true; break; }
                }
                if (!on_boundary) return false;
            } else if (shared != 2) {
                return false;
            }
        }
    }
    return true;
}

// Normal fan of the polyhedron, as a subdivision of the full-dimensional
// strictly convex cone sigma dual to the recession cone: the maximal cones
// are the loci in sigma where a fixed vertex is the <eta,.>-minimizer.
inline Fan dual_newton_diagram(const Polyhedron& p, const Cone& sigma) {
    std::size_t d = sigma.ambient_dim();
    if (!is_strictly_convex(sigma) || cone_dim(sigma) != d)
        throw DomainError("NoVertex",
                          "dual_newton_diagram: reference cone must be strictly convex and full-dimensional");
    if (!(dual_cone(sigma) == p.recession))
        throw DomainError("RecessionMismatch",
                          "dual_newton_diagram: recession cone is not dual to the reference cone");
    std::set<RatMat> seen;
    Fan fan;
    for (const auto& v : p.vertices) {
        RatMat normals = sigma.dual_rays();
        for (const auto& q : p.points)
            if (!(q == v)) normals.push_back(q - v);
        Cone nv = Cone::from_inequalities(d, normals);
        for (const auto& f : faces_of_cone(nv))
            if (seen.insert(f.rays()).second) fan.cones.push_back(f);
    }
    std::sort(fan.cones.begin(), fan.cones.end(), [](const Cone& x, const Cone& y) {
        std::size_t dx = cone_dim(x), dy = cone_dim(y);
        return dx != dy ? dx < dy : x.rays() < y.rays();
    });
    if (!is_valid_fan(fan, sigma))
        throw std::logic_error("dual_newton_diagram: produced an inconsistent fan");
    return fan;
}

// One-dimensional cones of the fan whose relative interior meets the relative
// interior of sigma; their primitive generators are the weight vectors of the
// exceptional divisors of the associated modification.
inline std::vector<RatVec> exceptional_edges(const Fan& fan, const Cone& sigma) {
    std::vector<RatVec> out;
    for (const auto& c : fan.cones) {
        if (c.rays().size() != 1 || cone_dim(c) != 1) continue;
        const RatVec& r = c.rays()[0];
        if (cone_contains(sigma, r, /*strict=*/true)) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct EscapeBound {
    bool empty = false;      // escape region is empty: every truncation is safe
    bool unbounded = false;  // escape region reaches arbitrarily large total order
    Rational value;          // when bounded: strict upper bound on total order there
};

// The escape region of a support S is the set of x >= 0 dominated by no point
// of S. An unknown exponent of a series truncated at total order T can only
// hide there, so if the bound below is <= T, every unknown exponent is
// dominated by a stored one and Newton-polyhedron computations are exact.
inline EscapeBound escape_bound(const std::vector<RatVec>& points_in) {
    // Only coordinatewise-minimal points constrain the region.
    std::vector<RatVec> pts = points_in;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<RatVec> points;
    for (const auto& p : pts) {
        bool minimal = true;
        for (const auto& q : pts)
            if (!(q == p) && q.dominated_by(p)) { minimal = false; break; }
        if (minimal) points.push_back(p);
    }
    if (points.empty()) return {false, true, 0};
    std::size_t d = points[0].dim();

    using Caps = std::vector<std::optional<Rational>>;
    std::map<std::pair<std::size_t, Caps>, EscapeBound> memo;
    std::function<EscapeBound(std::size_t, const Caps&)> rec = [&](std::size_t i,
                                                                   const Caps& caps) -> EscapeBound {
        if (i == points.size()) {
            EscapeBound r;
            for (const auto& c : caps) {
                if (!c) return {false, true, 0};
                r.value += *c;
            }
            return r;
        }
        auto key = std::make_pair(i, caps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const RatVec& s = points[i];
        EscapeBound result;
        bool hit = false;
        for (std::size_t j = 0; j < d && !hit; ++j)
            hit = s[j] > 0 && caps[j] && *caps[j] <= s[j];
        if (hit) {
            result = rec(i + 1, caps);
        } else {
            result.empty = true;
            for (std::size_t j = 0; j < d; ++j) {
                if (s[j] <= 0) continue;  // x_j < 0 is impossible: drop this branch
                Caps next = caps;
                next[j] = s[j];
                EscapeBound sub = rec(i + 1, next);
                if (sub.unbounded) { result = sub; break; }
                if (sub.empty) continue;
                if (result.empty || sub.value > result.value)
                    result = sub;
            }
        }
        memo[key] = result;
        return result;
    };
    return rec(0, Caps(d));
}

}  // namespace torsem
