#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rrg {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives a child seed; used for streams, grid points and trial indices.
inline std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
    return splitmix64(seed ^ splitmix64(value));
}

inline std::uint64_t double_bits(double x) { return std::bit_cast<std::uint64_t>(x); }

using Engine = std::mt19937_64;

/// Uniform in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Uniform in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    return x % bound;
}

template <class T>
void shuffle(std::vector<T>& items, Engine& engine) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(engine, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace rrg
