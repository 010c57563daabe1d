#pragma once

// Finitely generated affine semigroups inside (1/m)Z^d: membership, minimal
// generating sets, saturation (Hilbert basis of cone-and-group), dimensions
// of the graded pieces under a weight, and decision of abstract semigroup
// isomorphism with an explicit unimodular witness.

#include "torsem/cone.hpp"
#include "torsem/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace torsem {

class AffineSemigroup {
public:
    static AffineSemigroup from_generators(std::size_t dim, const RatMat& gens_in) {
        std::set<RatVec> uniq;
        for (const auto& g : gens_in) {
            if (g.dim() != dim) throw ParseError("semigroup generator has wrong dimension");
            if (!g.is_zero()) uniq.insert(g);
        }
        AffineSemigroup s;
        s.dim_ = dim;
        s.gens_ = RatMat(uniq.begin(), uniq.end());
        s.group_ = Sublattice::from_generators(dim, s.gens_);
        s.cone_ = Cone::from_generators(dim, s.gens_);
        for (const auto& g : s.gens_) s.m_ = lcm(s.m_, common_denominator(g));
        return s;
    }

    std::size_t dim() const { return dim_; }
    const RatMat& generators() const { return gens_; }
    const Sublattice& group() const { return group_; }
    const Cone& cone() const { return cone_; }
    const Integer& denominator() const { return m_; }

    bool operator==(const AffineSemigroup& o) const {
        return dim_ == o.dim_ && gens_ == o.gens_;
    }

private:
    AffineSemigroup() : group_(0) {}

    std::size_t dim_ = 0;
    RatMat gens_;  // sorted, unique, nonzero
    Sublattice group_;
    Cone cone_;
    Integer m_ = 1;
};

// A semigroup has a vertex at 0 exactly when its cone is pointed; all the
// combinatorial machinery below relies on that.
inline bool has_vertex(const AffineSemigroup& s) { return is_strictly_convex(s.cone()); }

namespace detail {

inline void require_vertex(const AffineSemigroup& s, const char* op) {
    if (!has_vertex(s))
        throw DomainError("NoVertex", std::string(op) + ": semigroup cone contains a line");
}

// A functional strictly positive on every nonzero element of the cone.
inline RatVec positive_weight(const AffineSemigroup& s) {
    RatVec w(s.dim());
    for (const auto& r : s.cone().dual_rays()) w += r;
    for (const auto& g : s.generators())
        if (dot(w, g) <= 0) throw std::logic_error("positive_weight: weight not positive");
    return w;
}

// All semigroup elements x with <w, x> <= bound, for w positive on the
// generators. Breadth-first closure starting at 0.
inline std::set<RatVec> elements_up_to(const AffineSemigroup& s, const RatVec& w,
                                       const Rational& bound) {
    std::set<RatVec> seen;
    std::deque<RatVec> queue;
    seen.insert(RatVec(s.dim()));
    queue.push_back(RatVec(s.dim()));
    while (!queue.empty()) {
        RatVec x = queue.front();
        queue.pop_front();
        for (const auto& g : s.generators()) {
            RatVec y = x + g;
            if (dot(w, y) > bound) continue;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen;
}

}  // namespace detail

inline bool semigroup_member(const RatVec& u, const AffineSemigroup& s) {
    detail::require_vertex(s, "semigroup_member");
    if (u.is_zero()) return true;
    if (!s.group().contains(u) || !cone_contains(s.cone(), u)) return false;
    RatVec w = detail::positive_weight(s);
    std::map<RatVec, bool> memo;
    std::function<bool(const RatVec&)> rec = [&](const RatVec& x) -> bool {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        memo[x] = false;  // cuts revisits along the current path
        for (const auto& g : s.generators()) {
            RatVec y = x - g;
            if (y.is_zero()) return memo[x] = true;
            if (dot(w, y) <= 0 || !cone_contains(s.cone(), y)) continue;
            if (rec(y)) return memo[x] = true;
        }
        return false;
    };
    return rec(u);
}

// The unique minimal generating set: elements of the given generating set
// that admit no decomposition into two nonzero elements.
inline RatMat minimal_generators(const AffineSemigroup& s) {
    detail::require_vertex(s, "minimal_generators");
    if (s.generators().empty()) return {};
    RatVec w = detail::positive_weight(s);
    Rational maxw = 0;
    for (const auto& g : s.generators()) maxw = std::max(maxw, dot(w, g));
    auto elems = detail::elements_up_to(s, w, maxw);
    RatMat out;
    for (const auto& g : s.generators()) {
        bool reducible = false;
        for (const auto& a : elems) {
            if (a.is_zero()) continue;
            Rational wa = dot(w, a);
            if (wa >= dot(w, g)) continue;
            if (elems.count(g - a)) { reducible = true; break; }
        }
        if (!reducible) out.push_back(g);
    }
    return out;
}

// Saturation: the semigroup of all group elements lying in the cone,
// returned by its Hilbert basis (which is its minimal generating set).
inline AffineSemigroup saturation(const AffineSemigroup& s) {
    detail::require_vertex(s, "saturation");
    if (s.generators().empty()) return s;
    const Sublattice& g = s.group();
    const Cone& c = s.cone();

    // Extreme rays rescaled to primitive elements of the group.
    RatMat rays_coords;  // in group-basis coordinates
    for (const auto& r : c.rays()) {
        auto x = g.coordinates(r);
        Integer l = common_denominator(*x);
        Integer content = 0;
        for (std::size_t i = 0; i < x->dim(); ++i)
            content = gcd(content, num((*x)[i] * l));
        content = iabs(content);
        RatVec y(x->dim());
        for (std::size_t i = 0; i < x->dim(); ++i) y[i] = (*x)[i] * Rational(l, content);
        rays_coords.push_back(y);
    }

    // Every irreducible of cone-and-group lies in the zonotope spanned by the
    // primitive ray generators; enumerate the integer box around it.
    std::size_t r = g.rank(), k = rays_coords.size();
    std::vector<Rational> lo(r, Rational(0)), hi(r, Rational(0));
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        RatVec sum(r);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) sum += rays_coords[i];
        for (std::size_t j = 0; j < r; ++j) {
            lo[j] = std::min(lo[j], sum[j]);
            hi[j] = std::max(hi[j], sum[j]);
        }
    }

    std::vector<RatVec> candidates;  // ambient coordinates
    RatVec counter(r);
    for (std::size_t j = 0; j < r; ++j) counter[j] = Rational(rational_ceil(lo[j]));
    while (true) {
        RatVec x(s.dim());
        for (std::size_t j = 0; j < r; ++j) x += counter[j] * g.basis()[j];
        if (!x.is_zero() && cone_contains(c, x)) candidates.push_back(x);
        std::size_t j = r;
        while (j > 0 && counter[j - 1] >= Rational(rational_floor(hi[j - 1]))) --j;
        if (j == 0) break;
        counter[j - 1] += 1;
        for (std::size_t i = j; i < r; ++i) counter[i] = Rational(rational_ceil(lo[i]));
    }

    RatVec w = detail::positive_weight(s);
    RatMat basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& a : candidates) {
            if (dot(w, a) >= dot(w, x)) continue;
            if (cone_contains(c, x - a)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }
    return AffineSemigroup::from_generators(s.dim(), basis);
}

// dims[k] = number of semigroup elements of weight k under n, for k = 0..upto.
// Weights of all generators must be positive integers.
inline std::vector<long long> graded_dims(const AffineSemigroup& s, const RatVec& n,
                                          long long upto) {
    if (n.dim() != s.dim())
        throw DomainError("RankMismatch", "graded_dims: weight has wrong dimension");
    for (const auto& g : s.generators()) {
        Rational v = dot(n, g);
        if (!is_integer(v))
            throw DomainError("NonIntegralWeight",
                              "graded_dims: generator weight " + to_string(v) + " is not an integer");
        if (v <= 0)
            throw DomainError("BoundaryWeight",
                              "graded_dims: weight must be positive on every generator");
    }
    auto elems = detail::elements_up_to(s, n, Rational(upto));
    std::vector<long long> dims(static_cast<std::size_t>(upto) + 1, 0);
    for (const auto& x : elems) {
        Rational v = dot(n, x);
        if (v <= upto) ++dims[static_cast<std::size_t>(num(v).convert_to<long long>())];
    }
    return dims;
}

struct SemigroupIso {
    IntMat matrix;    // unimodular W: row coords in basis_a |-> row coords in basis_b
    RatMat basis_a;   // canonical group basis of the first semigroup
    RatMat basis_b;   // canonical group basis of the second semigroup
    std::uint64_t nodes = 0;
};

namespace detail {

inline std::vector<RatVec> intrinsic_coords(const AffineSemigroup& s, const RatMat& gens) {
    std::vector<RatVec> out;
    for (const auto& g : gens) out.push_back(*s.group().coordinates(g));
    return out;
}

}  // namespace detail

// Decides whether two semigroups are abstractly isomorphic, i.e. whether some
// group isomorphism matches their minimal generators bijectively. nullopt is
// a certified "no"; exhausting the node budget raises SearchBudgetExceeded.
inline std::optional<SemigroupIso> are_isomorphic(const AffineSemigroup& a,
                                                  const AffineSemigroup& b,
                                                  std::uint64_t budget = 200000) {
    detail::require_vertex(a, "are_isomorphic");
    detail::require_vertex(b, "are_isomorphic");
    std::size_t r = a.group().rank();
    if (r != b.group().rank()) return std::nullopt;
    RatMat mg_a = minimal_generators(a), mg_b = minimal_generators(b);
    if (mg_a.size() != mg_b.size()) return std::nullopt;
    std::size_t s = mg_a.size();
    SemigroupIso iso;
    iso.basis_a = a.group().basis();
    iso.basis_b = b.group().basis();
    if (s == 0) return iso;  // both are {0}

    auto ca = detail::intrinsic_coords(a, mg_a), cb = detail::intrinsic_coords(b, mg_b);

    // Canonical weight: sum of the primitive dual rays of the intrinsic cone.
    // It transforms contravariantly under any unimodular identification, so
    // generator weights are isomorphism invariants.
    auto canonical_weights = [r](const std::vector<RatVec>& coords) {
        Cone c = Cone::from_generators(r, RatMat(coords.begin(), coords.end()));
        RatVec w(r);
        for (const auto& d : c.dual_rays()) w += d;
        std::vector<Rational> vals;
        for (const auto& g : coords) vals.push_back(dot(w, g));
        return vals;
    };
    auto wa = canonical_weights(ca), wb = canonical_weights(cb);
    {
        auto sa = wa, sb = wb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    // Pairwise-sum fingerprint: how often g_i + g_j is realized as a sum of
    // two minimal generators, tagged by the weight of the partner.
    auto fingerprint = [&](const std::vector<RatVec>& coords, const std::vector<Rational>& w) {
        std::map<RatVec, int> sums;
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = i; j < coords.size(); ++j) ++sums[coords[i] + coords[j]];
        std::vector<std::vector<std::pair<Rational, int>>> fp(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            for (std::size_t j = 0; j < coords.size(); ++j)
                fp[i].push_back({w[j], sums[coords[i] + coords[j]]});
            std::sort(fp[i].begin(), fp[i].end());
        }
        return fp;
    };
    auto fa = fingerprint(ca, wa), fb = fingerprint(cb, wb);

    std::vector<std::vector<std::size_t>> cand(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j)
            if (wa[i] == wb[j] && fa[i] == fb[j]) cand[i].push_back(j);
        if (cand[i].empty()) return std::nullopt;
    }

    std::vector<std::size_t> assign(s);
    std::vector<bool> used(s, false);
    std::uint64_t nodes = 0;
    std::optional<RatMat> w_mat;  // determined once an independent prefix exists

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == s) return true;
        for (std::size_t j : cand[i]) {
            if (used[j]) continue;
            if (++nodes > budget)
                throw DomainError("SearchBudgetExceeded",
                                  "are_isomorphic: search budget exhausted after " +
                                      std::to_string(nodes) + " nodes");
            if (w_mat) {
                if (!(mat_apply(*w_mat, ca[i]) == cb[j])) continue;
            }
            assign[i] = j;
            used[j] = true;
            std::optional<RatMat> saved = w_mat;
            bool ok = true;
            if (!w_mat) {
                // try to pin down the matrix from the assigned prefix
                RatMat rows, imgs;
                for (std::size_t t = 0; t <= i; ++t) {
                    rows.push_back(ca[t]);
                    imgs.push_back(cb[assign[t]]);
                }
                if (rank(rows) == r) {
                    // solve rows * W^T = imgs row by row: W^T columns from solving
                    // each coordinate; equivalently W maps row vectors x |-> x W.
                    RatMat wt;  // W as acting on the left: imgs = rows * W
                    bool solved = true;
                    RatMat rt = transpose(rows), it_ = transpose(imgs);
                    for (std::size_t col = 0; col < r && solved; ++col) {
                        auto x = solve_left(rt, it_[col]);
                        if (!x) solved = false;
                        else wt.push_back(*x);
                    }
                    if (!solved) {
                        ok = false;  // inconsistent images on a spanning set
                    } else {
                        // wt rows: column col of W; W(x) = x * W computed as below
                        RatMat wmat = transpose(wt);
                        bool integral = true;
                        for (const auto& row : wmat)
                            if (!row.is_integral()) { integral = false; break; }
                        Rational dw = integral ? det(wmat) : Rational(0);
                        if (!integral || (dw != 1 && dw != -1)) {
                            ok = false;
                        } else {
                            // check consistency of the whole prefix
                            RatMat wrows = transpose(wmat);
                            for (std::size_t t = 0; t <= i && ok; ++t)
                                if (!(mat_apply(wrows, ca[t]) == cb[assign[t]])) ok = false;
                            if (ok) w_mat = wrows;
                        }
                    }
                }
            }
            if (ok && dfs(i + 1)) return true;
            w_mat = saved;
            used[j] = false;
        }
        return false;
    };

    if (!dfs(0)) return std::nullopt;
    iso.nodes = nodes;
    // export W with rows acting by x |-> x W on row coordinate vectors
    RatMat wrows = *w_mat;  // wrows applied via mat_apply to coordinate vectors
    RatMat wmat = transpose(wrows);
    for (const auto& row : wmat) {
        IntVec irow;
        for (std::size_t j = 0; j < row.dim(); ++j) irow.push_back(num(row[j]));
        iso.matrix.push_back(irow);
    }
    return iso;
}

}  // namespace torsem
