#pragma once

#include <cstdint>
#include <random>

namespace wignerlab {

/// Identifies one independent random stream: sample `stream_index` of the
/// run seeded with `master_seed`.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// SplitMix64 finalizer; a bijective avalanche mix of 64 bits.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stateless derivation of the engine seed for a stream. No state is shared
/// between streams, so sample i produces the same draws on any worker.
constexpr std::uint64_t stream_seed(const SeedSpec& seed) noexcept {
  return mix64(seed.master_seed ^ mix64(seed.stream_index ^ 0x5851f42d4c957f2dULL));
}

/// Derive a child master seed, e.g. one per matrix size in a sweep.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) noexcept {
  return mix64(master + 0x632be59bd9b4e019ULL * (salt + 1));
}

using Rng = std::mt19937_64;

inline Rng make_rng(const SeedSpec& seed) { return Rng(stream_seed(seed)); }

}  // namespace wignerlab
