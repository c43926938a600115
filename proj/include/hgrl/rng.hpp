#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hgrl {

using Rng = std::mt19937_64;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

// Stage seeds derive from the master seed and the stage name so stages stay
// independently reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
    return detail::splitmix64(master ^ detail::fnv1a64(stage));
}

// Sub-stream seed for worker/walk indices under one stage seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return detail::splitmix64(seed ^ detail::splitmix64(a ^ detail::splitmix64(b + 0x9e3779b97f4a7c15ULL)));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace hgrl
