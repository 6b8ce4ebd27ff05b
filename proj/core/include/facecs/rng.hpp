// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace facecs::rng {

/// Generator recorded in experiment reports. std::mt19937_64 output is fixed
/// by the C++ standard, so seeded streams match across platforms.
inline constexpr const char* kAlgorithmId = "mt19937_64";

using Engine = std::mt19937_64;

/// splitmix64 mixing step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for stream (a, b) of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return h;
}

/// Unbiased draw from [0, n). std::uniform_int_distribution is not pinned by
/// the standard, so bounded draws are rejection-sampled here directly.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold) return r % n;
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (cosine branch).
inline double normal(Engine& eng) {
    double u1 = unit_real(eng);
    const double u2 = unit_real(eng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// In-place Fisher-Yates shuffle using bounded().
template <typename T>
void shuffle(std::vector<T>& items, Engine& eng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// First k entries of a Fisher-Yates pass over `pool` (order preserved as drawn).
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, Engine& eng) {
    if (k > pool.size()) k = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded(eng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace facecs::rng
