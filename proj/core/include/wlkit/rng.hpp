#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace wlkit {

// std::uniform_int_distribution and friends are implementation-defined, which
// would break the per-seed determinism contract across standard libraries.
// These helpers draw from the (fully specified) mt19937_64 stream directly.

inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

// Uniform in [0, 1) with 53 random bits.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace wlkit
