#pragma once

#include <cstdint>
#include <random>

namespace forb::rng {

// mt19937_64 output is pinned by the standard, and these helpers avoid
// std::uniform_*_distribution, whose mapping is implementation-defined.
// All randomized code in the project routes through this header so that
// fixed seeds give byte-identical results everywhere.

inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % bound;
}

inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace forb::rng
