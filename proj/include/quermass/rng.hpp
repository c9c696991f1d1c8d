#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace quermass {

// Counter-based generator: value = f(seed, stream, counter) with the
// SplitMix64 finalizer as the mixing function. Stateless by construction, so
// any sample can be produced by any worker and runs are bit-reproducible for
// a given seed regardless of the worker count.
namespace rng {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline uint64_t value(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t a = mix64(seed + kGolden);
    uint64_t b = mix64(a ^ (stream * kGolden + 0x243F6A8885A308D3ULL));
    return mix64(b + counter * kGolden);
}

// uniform in the open interval (0, 1)
inline double uniform(uint64_t seed, uint64_t stream, uint64_t counter) {
    return (static_cast<double>(value(seed, stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

// standard normal via Box-Muller; consecutive counters 2k, 2k+1 feed one pair
inline double normal(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t pair = counter / 2;
    double u1 = uniform(seed, stream, 2 * pair);
    double u2 = uniform(seed, stream, 2 * pair + 1);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    return (counter % 2 == 0) ? r * std::cos(a) : r * std::sin(a);
}

}  // namespace rng
}  // namespace quermass
