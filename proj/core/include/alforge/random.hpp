#ifndef ALFORGE_RANDOM_HPP
#define ALFORGE_RANDOM_HPP

#include <cstdint>
#include <random>

namespace alforge {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent seed streams so that
// parallel legs / committee members cannot collide or depend on run order.
inline std::uint64_t mix_bits(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix_bits(mix_bits(master) ^ mix_bits(stream * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream = 0) {
    return Rng(derive_seed(master, stream));
}

} // namespace alforge

#endif
