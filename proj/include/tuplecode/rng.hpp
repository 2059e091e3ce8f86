#pragma once

#include <cstdint>

#include "tuplecode/bits.hpp"

namespace tuplecode {

/// SplitMix64 generator. Chosen over <random> engines so that identical seeds
/// produce identical draws on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    Bit next_bit() { return static_cast<Bit>(next_u64() >> 63); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based seed derivation: every sweep point hashes (master, a, b, c)
/// to its own seed, so points are independent and individually replayable.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(master ^ 0xA0761D6478BD642Full);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

/// Role tags mixed into derive_seed so the encode, channel and codebook
/// streams never collide.
namespace seed_role {
inline constexpr std::uint64_t encode = 0xE1;
inline constexpr std::uint64_t channel = 0xC1;
inline constexpr std::uint64_t codebook = 0xB1;
} // namespace seed_role

} // namespace tuplecode
