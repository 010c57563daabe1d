#pragma once

// Seeded randomness for the verification reports. mt19937_64 is fully
// specified by the standard, and we reduce by modulo instead of going through
// uniform_int_distribution (whose mapping is implementation-defined), so a
// given seed produces the same stream on every platform.

#include <cstdint>
#include <random>

namespace torsem {

inline constexpr std::uint64_t kDefaultSeed = 7340059;

class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    // uniform on [lo, hi], inclusive; modulo bias is irrelevant at our sizes
    long next(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // uniform nonzero value in [-bound, bound]
    long next_nonzero(long bound) {
        long v = next(1, 2 * bound);
        return v <= bound ? v : bound - v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace torsem
