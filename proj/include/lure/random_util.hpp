#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace lure {

/// Unbiased draw in [0, n). Rejection sampling on raw engine output;
/// std::uniform_int_distribution is implementation-defined and would break
/// cross-platform reproducibility of seeded runs.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;
    std::uint64_t v = rng();
    if (rem != 0) {
        const std::uint64_t bound = max - rem + 1;  // largest multiple of n
        while (v >= bound) v = rng();
    }
    return v % n;
}

/// Uniform double in [0, 1) with 53 random bits; same caveat as draw_below.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace lure
