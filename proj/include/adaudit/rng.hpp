// Copyright 2026 The adaudit Authors
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
#include <string_view>

namespace adaudit::rng {

/// SplitMix64 finalizer. Full-avalanche 64-bit mix.
constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash_tag(std::string_view tag) noexcept {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based random stream. A Stream is an immutable key; draws are
/// pure functions of (key, counter). Substreams derived with fork() are
/// independent of the order and number of draws elsewhere, which is what
/// makes gender-label permutation and coupled-sampling properties hold.
class Stream {
 public:
  explicit constexpr Stream(std::uint64_t seed) : key_(mix(seed ^ kRootTag)) {}

  constexpr Stream fork(std::uint64_t tag) const {
    return Stream(raw_key{}, mix(key_ ^ mix(tag)));
  }

  constexpr Stream fork(std::string_view tag) const { return fork(hash_tag(tag)); }

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix(key_ ^ mix(counter ^ kDrawTag));
  }

  /// Uniform draw in [0, 1). 53 mantissa bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  bool bernoulli(std::uint64_t counter, double p) const {
    return uniform(counter) < p;
  }

  /// Poisson draw by CDF inversion over a single uniform. Suitable for the
  /// session-rate regime (mean << 50); throws nothing, clamps huge means.
  std::uint32_t poisson(std::uint64_t counter, double mean) const {
    if (mean <= 0.0) return 0;
    const double u = uniform(counter);
    double pmf = std::exp(-mean);
    double cdf = pmf;
    std::uint32_t k = 0;
    // Hard stop far in the tail; for mean <= 50 this is unreachable in practice.
    const std::uint32_t k_max =
        static_cast<std::uint32_t>(mean + 20.0 * std::sqrt(mean) + 30.0);
    while (u >= cdf && k < k_max) {
      ++k;
      pmf *= mean / static_cast<double>(k);
      cdf += pmf;
    }
    return k;
  }

  /// Standard normal via Box-Muller on a private sub-fork.
  double normal(std::uint64_t counter) const {
    const Stream s = fork(counter ^ kNormalTag);
    double u1 = s.uniform(0);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = s.uniform(1);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  double lognormal(std::uint64_t counter, double mu_log, double sigma_log) const {
    return std::exp(mu_log + sigma_log * normal(counter));
  }

 private:
  struct raw_key {};
  constexpr Stream(raw_key, std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t kRootTag = 0x61647261756469ULL;
  static constexpr std::uint64_t kDrawTag = 0xd1b54a32d192ed03ULL;
  static constexpr std::uint64_t kNormalTag = 0x9e6c63d0876a9ULL;

  std::uint64_t key_;
};

}  // namespace adaudit::rng
