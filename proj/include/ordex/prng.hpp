// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace ordex {

// 64-bit digests stand in for cryptographic hashes throughout the simulator.
// The network model is honest-only, so collision resistance buys nothing;
// what matters is that every node derives bit-identical values from the same
// inputs on every platform.
using Digest = std::uint64_t;

namespace detail {

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  return detail::mix64(x + detail::kGamma);
}

// Order-sensitive combination of two words.
inline constexpr Digest combine(Digest a, Digest b) {
  return detail::mix64(detail::mix64(a + detail::kGamma) ^ (b + detail::kGamma));
}

inline constexpr Digest combine(Digest a, Digest b, Digest c) {
  return combine(combine(a, b), c);
}

inline std::string to_hex(Digest d) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[d & 0xf];
    d >>= 4;
  }
  return out;
}

// Deterministic counter-based PRNG (splitmix64 stream). Hand-rolled rather
// than <random> because std::shuffle and std::uniform_int_distribution give
// implementation-defined sequences, and the sim contracts require identical
// traces for identical seeds everywhere.
class SplitMix {
 public:
  explicit constexpr SplitMix(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += detail::kGamma;
    return detail::mix64(state_);
  }

  // Unbiased draw in [0, range) via Lemire's method with rejection.
  std::uint64_t bounded(std::uint64_t range) {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next()) * range;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < range) {
      const std::uint64_t threshold = (0 - range) % range;
      while (lo < threshold) {
        m = static_cast<u128>(next()) * range;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

// Independent stream keyed by (seed, label); used so that, e.g., block-size
// draws for height h do not depend on how many values earlier heights drew.
inline SplitMix keyed_stream(std::uint64_t seed, std::uint64_t label) {
  return SplitMix(combine(seed, label));
}

}  // namespace ordex
