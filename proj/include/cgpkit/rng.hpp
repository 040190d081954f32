/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_RNG_HPP
#define CGPKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace cgpkit {

// Counter-based randomness: every variate is a pure function of
// (seed, counter, lane), so a stream can be replayed or chunked across
// workers without changing a single draw.

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Keyed word: uniform 64-bit value addressed by (seed, counter, lane).
constexpr std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t counter,
                                   std::uint64_t lane) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (counter + 0xd1b54a32d192ed03ULL));
  h = mix64(h ^ (lane + 0x8bb84b93962eacc9ULL));
  return h;
}

/// Map a 64-bit word to a double in the open interval (0, 1).
inline double uniform_open01(std::uint64_t word) noexcept {
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

/// Lane-advancing view over the keyed stream of one event (seed, counter).
class KeyedStream {
public:
  KeyedStream(std::uint64_t seed, std::uint64_t counter) noexcept
      : seed_(seed), counter_(counter) {}

  std::uint64_t next_word() noexcept { return keyed_word(seed_, counter_, lane_++); }

  /// Uniform draw in (0, 1).
  double uniform() noexcept { return uniform_open01(next_word()); }

  /// Uniform draw in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) noexcept { return next_word() % n; }

  /// Unit-rate exponential variate.
  double exponential() noexcept { return -std::log(uniform()); }

  /// Standard normal variate (Box-Muller, one half pair per call).
  double gaussian() noexcept {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::uint64_t seed_;
  std::uint64_t counter_;
  std::uint64_t lane_ = 0;
};

} // namespace cgpkit

#endif // CGPKIT_RNG_HPP
