#pragma once

#include <cstdint>

namespace metricerr {

// Counter-based random streams built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). Every variate is a pure function of
// (seed, observation index, draw index), so sampling can be partitioned
// across threads in any way without changing a single bit of output.
//
// Stream construction, fixed by contract:
//   key  = mix64(mix64(seed ^ 0x9e3779b97f4a7c15 * (obs + 1))
//                ^ 0xd1b54a32d192ed03 * (draw + 1))
//   word_j = mix64(key + 0x9e3779b97f4a7c15 * (j + 1))        j = 0, 1, ...
//   uniforms map the top 53 bits of a word into [0, 1) or (0, 1].
// Normals use the Box-Muller cosine branch on (word_0, word_1).
namespace rng {

// SplitMix64 output scrambler.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kDrawSalt = 0xd1b54a32d192ed03ULL;

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t obs,
                                   std::uint64_t draw) noexcept {
    return mix64(mix64(seed ^ kGolden * (obs + 1)) ^ kDrawSalt * (draw + 1));
}

constexpr std::uint64_t stream_word(std::uint64_t key, std::uint64_t j) noexcept {
    return mix64(key + kGolden * (j + 1));
}

// [0, 1), 53-bit resolution.
constexpr double to_unit_open_right(std::uint64_t w) noexcept {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// (0, 1]: safe as a log() argument.
constexpr double to_unit_open_left(std::uint64_t w) noexcept {
    return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

// Standard normal draw for (seed, obs, draw).
double standard_normal(std::uint64_t seed, std::uint64_t obs, std::uint64_t draw) noexcept;

// Bernoulli draw: true with probability p.
inline bool bernoulli(std::uint64_t seed, std::uint64_t obs, std::uint64_t draw,
                      double p) noexcept {
    const std::uint64_t key = stream_key(seed, obs, draw);
    return to_unit_open_right(stream_word(key, 0)) < p;
}

}  // namespace rng
}  // namespace metricerr
