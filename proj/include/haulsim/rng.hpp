#pragma once

#include <cstdint>
#include <random>

// Deterministic RNG plumbing. Everything random in this library flows
// through mt19937_64 plus the helpers here, never through the distribution
// wrappers in <random>, whose output differs across standard libraries.

namespace haulsim {

// splitmix64 finalizer, used to derive independent child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). The modulo bias is below 2^-59 for the grid sizes
// used here, and unlike uniform_int_distribution the result is identical on
// every platform.
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t n) {
    return eng() % n;
}

}  // namespace haulsim
