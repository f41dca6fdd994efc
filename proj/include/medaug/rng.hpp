/**
 * Copyright 2026 The medaugment-cpp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef MEDAUG_RNG_HPP_
#define MEDAUG_RNG_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace medaug {

/// splitmix64 finalizer (Steele, Lea, Flood 2014; Vigna's fixed-increment form).
inline std::uint64_t mix64(std::uint64_t z) {
  z += UINT64_C(0x9E3779B97F4A7C15);
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

/**
 * @brief Deterministic counter-less random stream based on splitmix64.
 *
 * All distribution mappings are implemented here rather than with <random>
 * adaptors, whose output is implementation-defined. Two builds on any
 * platform therefore produce identical draw sequences for equal states.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += UINT64_C(0x9E3779B97F4A7C15);
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + next_double() * (hi - lo);
  }

  /// Uniform integer in [lo, hi], inclusive and unbiased (masked rejection).
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range <= 1) return lo;
    const std::uint64_t mask = ~UINT64_C(0) >> std::countl_zero(range - 1);
    std::uint64_t x;
    do {
      x = next_u64() & mask;
    } while (x >= range);
    return lo + static_cast<int>(x);
  }

  /// Standard normal via Box-Muller; consumes exactly two raw draws.
  double normal() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Fisher-Yates shuffle with this stream (std::shuffle is unspecified).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const int j = uniform_int(0, static_cast<int>(i) - 1);
      std::swap(v[i - 1], v[static_cast<std::size_t>(j)]);
    }
  }

 private:
  std::uint64_t state_;
};

/**
 * @brief Derives the reproducible stream for one (image, branch) task.
 *
 * The mapping is part of the determinism contract and stable across
 * versions: the three inputs are absorbed sequentially through the
 * splitmix64 finalizer. Equal inputs give equal streams; parallel and
 * serial runs see identical draws because no global state exists.
 */
inline Rng derive_stream(std::uint64_t seed, std::uint64_t image_index,
                         std::uint64_t branch_index) {
  std::uint64_t s = mix64(seed);
  s = mix64(s ^ image_index);
  s = mix64(s ^ branch_index);
  return Rng(s);
}

/// Reserved branch slot feeding per-image strategy assignment.
inline constexpr std::uint64_t kStrategyStream = ~UINT64_C(0);

}  // namespace medaug

#endif  // MEDAUG_RNG_HPP_
