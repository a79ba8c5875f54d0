// Copyright 2026 The recforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace recforge {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Key for substream `index` of the stream keyed by `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

/// Counter-based generator: output n is mix64(key + n * golden).
///
/// Distributions are implemented here instead of <random> so that a given
/// (seed, call sequence) yields the same numbers under every standard
/// library. Substreams are obtained with split(), which never advances the
/// parent.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Rng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  constexpr Rng split(std::uint64_t stream) const noexcept {
    return Rng(derive_seed(key_, stream));
  }

  constexpr std::uint64_t key() const noexcept { return key_; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>((*this)());  // full 64-bit range
    // Rejection sampling on the top of the range keeps the result unbiased.
    const std::uint64_t limit = max() - max() % span;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Always consumes exactly one draw.
  bool bernoulli(double p) noexcept { return uniform01() < p; }

  /// Knuth's product method, applied in chunks of mean <= 64 to stay clear
  /// of exp() underflow.
  std::int64_t poisson(double lambda) noexcept {
    std::int64_t total = 0;
    while (lambda > 0.0) {
      const double chunk = lambda > 64.0 ? 64.0 : lambda;
      lambda -= chunk;
      const double floor_value = std::exp(-chunk);
      double product = uniform01();
      while (product > floor_value) {
        ++total;
        product *= uniform01();
      }
    }
    return total;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Fisher-Yates shuffle driven by Rng::uniform_int.
template <typename It>
void shuffle(It first, It last, Rng& rng) {
  const auto n = last - first;
  for (auto i = n - 1; i > 0; --i) {
    const auto j = rng.uniform_int(0, static_cast<std::int64_t>(i));
    using std::swap;
    swap(first[i], first[j]);
  }
}

}  // namespace recforge
