#pragma once

#include <cstdint>
#include <random>

namespace permstego {

/// Uniform integer in [0, bound) by rejection, so no modulo bias. Unlike
/// std::uniform_int_distribution the output is the same on every standard
/// library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace permstego
