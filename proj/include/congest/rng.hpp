#pragma once

#include <cstdint>
#include <random>

namespace congest {

// splitmix64 finalizer; stateless, used to derive counter-based streams so a
// draw for (seed, tag, index) never depends on evaluation order.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b) ^ c);
}
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix64(mix64(a, b, c) ^ d);
}

// Order-independent uniform draw in [0, bound). Modulo bias is negligible for
// the part counts used here and keeps runs bit-reproducible across platforms.
inline std::uint64_t counter_uniform(std::uint64_t key, std::uint64_t bound) {
    return bound <= 1 ? 0 : mix64(key) % bound;
}

// Sequential engine for permutations and generators; mt19937_64 output is
// fully specified by the standard, so results are portable.
inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(mix64(seed)); }

inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t bound) {
    return bound <= 1 ? 0 : eng() % bound;
}

} // namespace congest
