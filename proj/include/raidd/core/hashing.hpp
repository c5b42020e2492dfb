#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace raidd {

// Portable 64-bit FNV-1a. std::hash is implementation-defined, which would
// break the cross-platform byte-identical-output contract of mock runs.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// SplitMix64 step; a fixed, platform-independent pseudo-random stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * (1.0 / 9007199254740992.0);
}

std::string hex64(std::uint64_t v);

}  // namespace raidd
