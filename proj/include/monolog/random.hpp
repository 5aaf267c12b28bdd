#pragma once

#include <cstdint>
#include <random>

namespace monolog {

// std::mt19937_64's output sequence is fixed by the standard; the
// distributions are not, so bounded draws use rejection sampling on the raw
// 64-bit outputs. Results are identical across platforms for a given seed.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace monolog
