#pragma once

#include <cstdint>
#include <random>

namespace varmult {

// splitmix64, used to derive independent substream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per-stream engine: stream k of a master seed is independent of
// how many streams are drawn before it.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(master_seed ^ splitmix64(stream + 1)));
}

} // namespace varmult
