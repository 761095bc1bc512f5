// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deterministic random streams.
//
// Generator: xoshiro256** 1.0 (Blackman & Vigna). The 256-bit state is filled
// from a single 64-bit seed by four successive SplitMix64 outputs, the
// initialization recommended by the xoshiro authors. Doubles in [0, 1) take the
// top 53 bits of one output: (next() >> 11) * 2^-53.
//
// Derived streams: seed_for(root, index) = splitmix64(root ^ splitmix64(index)).
// Every per-element and per-record stream in the library is keyed this way, so
// results never depend on evaluation order.

#include <array>
#include <cstdint>

namespace hcos {

/// One step of SplitMix64 applied to `x` (the finalizer of the stream, with
/// the golden-gamma increment folded in).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t seed_for(std::uint64_t root, std::uint64_t index) noexcept {
  return splitmix64(root ^ splitmix64(index));
}

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      word = z ^ (z >> 31);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace hcos
