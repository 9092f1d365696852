#pragma once

#include <cstdint>
#include <random>

namespace linkscale {

/// All randomness goes through mt19937_64, whose output sequence is fixed by
/// the standard. Each stage draws from its own substream whose seed is
/// derive_seed(user_seed, stage, index), so the seed graph, every evolve
/// step, every noisy source snapshot and every sweep window are independent
/// of one another and of evaluation order.
using Engine = std::mt19937_64;

enum class Stream : std::uint64_t {
  SeedGraph = 1,
  Evolve = 2,
  Noise = 3,
  Subsample = 4,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                                    std::uint64_t index = 0) noexcept {
  return mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(stream)) + index);
}

inline Engine make_engine(std::uint64_t seed, Stream stream, std::uint64_t index = 0) {
  return Engine(derive_seed(seed, stream, index));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace linkscale
