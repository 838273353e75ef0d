// spkid/rng.h

// Copyright 2026  The spkid Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SPKID_RNG_H_
#define SPKID_RNG_H_

#include <cmath>
#include <cstdint>
#include <string_view>

namespace spkid {

// Seeded splitmix64 generator. The standard <random> distributions are not
// bit-stable across library implementations, so everything that must be
// reproducible (corpus synthesis, codebook sampling) draws from this engine
// and the explicit transforms below.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t NextU64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextUniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUniform();
  }

  // Uniform integer in [0, n), n >= 1.
  int NextInt(int n) {
    return static_cast<int>(
        (static_cast<unsigned __int128>(NextU64()) *
         static_cast<unsigned __int128>(n)) >> 64);
  }

  // Standard normal via the polar method; consumes a variable number of
  // draws, one reason every utterance gets its own engine.
  double NextGaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * NextUniform() - 1.0;
      v = 2.0 * NextUniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    have_cached_ = true;
    return u * f;
  }

 private:
  uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Deterministic fan-out of one user seed into independent streams.
inline uint64_t MixSeed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed ^ (salt + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline uint64_t MixSeed(uint64_t seed, uint64_t a, uint64_t b) {
  return MixSeed(MixSeed(seed, a), b);
}

inline uint64_t MixSeed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return MixSeed(MixSeed(MixSeed(seed, a), b), c);
}

// FNV-1a, used to fold speaker ids into seed streams.
inline uint64_t HashString(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Salts for the independent seed streams derived from the run seed.
inline constexpr uint64_t kSaltSpeakerBank = 0x01;
inline constexpr uint64_t kSaltUtterance = 0x02;
inline constexpr uint64_t kSaltCodebook = 0x03;

}  // namespace spkid

#endif  // SPKID_RNG_H_
