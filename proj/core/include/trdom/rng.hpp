#pragma once

// Seedable, portable randomness. std::mt19937_64 output is bit-exact across
// implementations; the standard <random> distributions are not, so uniform
// draws are done by hand here to keep generated fixtures reproducible.

#include <cstdint>
#include <random>

namespace trdom::rng {

// Stream splitter: successive calls yield independent-looking sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform in [0,1) with 53 bits of precision.
inline double unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform in [0,n) by rejection; unbiased and implementation-independent.
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x = g();
    while (x >= limit) x = g();
    return x % n;
}

// Uniform integer in [lo,hi], inclusive.
inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    return lo + static_cast<int>(below(g, static_cast<std::uint64_t>(hi) - lo + 1));
}

}  // namespace trdom::rng
