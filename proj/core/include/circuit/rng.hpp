#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace circuit {

// Deterministic random helpers. std::uniform_*_distribution and std::shuffle
// are implementation-defined, so everything that must reproduce bit-for-bit
// across standard libraries goes through these instead.

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * canonical(rng);
}

/// Uniform integer in [0, n). Rejection-sampled, unbiased.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

/// Approximate standard normal (12-uniform sum; plenty for test-image noise).
inline double gauss(Rng& rng) {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += canonical(rng);
    return s - 6.0;
}

/// Fisher-Yates shuffle with a fixed draw sequence.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace circuit
