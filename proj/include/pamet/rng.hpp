#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pamet/types.hpp"

namespace pamet {

/// Deterministic 64-bit generator (splitmix64). All seeded draws in the
/// library go through this so that results do not depend on the standard
/// library's distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Multiply-shift reduction; bias is O(n / 2^64) which is irrelevant here.
  Index below(Index n) {
    return static_cast<Index>(
        (static_cast<unsigned __int128>(next()) * static_cast<std::uint64_t>(n)) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  Scalar uniform01() { return static_cast<Scalar>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// A derived, independent stream for sub-tasks of a seeded computation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0xd1b54a32d192ed03ULL));
  return g.next();
}

/// First `draw` elements of a random permutation of {0, ..., population-1}.
inline std::vector<Index> sample_without_replacement(SplitMix64& rng, Index population,
                                                     Index draw) {
  if (draw > population) throw std::invalid_argument("sample larger than population");
  std::vector<Index> pool(static_cast<std::size_t>(population));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index i = 0; i < draw; ++i) {
    const Index j = i + rng.below(population - i);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(draw));
  return pool;
}

}  // namespace pamet
