#pragma once

// Exact linear-programming feasibility test: does A x = b admit x >= 0?
// Phase-I simplex over the rationals with Bland's rule, so it always
// terminates and never suffers rounding. Problem sizes here are tiny
// (vertex tests on Newton polyhedra), so no effort is spent on speed.

#include "torsem/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace torsem {

inline bool lp_feasible(const RatMat& a, const RatVec& b) {
    std::size_t m = a.size();
    if (m == 0) return true;
    std::size_t n = a[0].dim();
    std::size_t cols = n + m + 1;  // structural, artificial, rhs

    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = b[i] < 0 ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = s * b[i];
        basis[i] = n + i;
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        Rational inv = Rational(1) / t[pr][pc];
        for (auto& x : t[pr]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rational f = t[i][pc];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    // Minimize the sum of artificial variables; feasible iff the optimum is 0.
    while (true) {
        std::size_t enter = cols;  // Bland: first column with negative reduced cost
        for (std::size_t j = 0; j + 1 < cols && enter == cols; ++j) {
            Rational red = j >= n ? Rational(1) : Rational(0);
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= n) red -= t[i][j];
            if (red < 0) enter = j;
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("lp_feasible: phase-I objective unbounded");
        pivot(leave, enter);
    }

    Rational opt = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) opt += t[i][cols - 1];
    return opt == 0;
}

}  // namespace torsem
