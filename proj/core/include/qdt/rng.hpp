// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace qdt {

// All randomness in the library flows through mt19937_64 streams whose seeds
// are derived with derive_seed below. Uniform/normal variates are generated
// by the helpers in this header instead of std::*_distribution, whose output
// is implementation-defined; this keeps reruns of the same configuration
// bit-identical.
using Rng = std::mt19937_64;

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stable stream-seed derivation:
//   derive_seed(m, i, r) = mix64(mix64(mix64(m) ^ fnv1a64(r)) ^ i)
// Distinct role tags give statistically independent streams for the same
// master seed and index. The constants above are part of the file-format
// stability contract: outputs for a given (master, index, role) never change.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t index,
                                    std::string_view role_tag) {
  return mix64(mix64(mix64(master_seed) ^ fnv1a64(role_tag)) ^ index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Uniform double in [0, 1), 53 random bits. Never returns 1.0, so
// `uniform_unit(rng) < p` is an exact Bernoulli(p) for p in [0, 1].
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Standard normal via Box-Muller (cosine branch).
inline double gaussian(Rng& rng) {
  const double u1 = 1.0 - uniform_unit(rng);  // (0, 1]: log stays finite
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace qdt
