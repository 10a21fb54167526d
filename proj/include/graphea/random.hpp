/*
  Copyright (c) the graphea authors.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef GRAPHEA_RANDOM_HPP
#define GRAPHEA_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace graphea {

// Deterministic source of all randomness used by the library.
//
// The distribution transforms live here instead of going through
// std::*_distribution because the standard does not pin their algorithms;
// with the transforms fixed, a seed reproduces the exact draw sequence on
// any platform, which the reproducibility guarantees depend on.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Uniform draw in [0, 1) with 53 random mantissa bits.
  double uniform();

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi);

  /// Unbiased uniform draw from {0, ..., n-1}; n must be positive.
  std::size_t index(std::size_t n);

  /// Standard normal draw, Box-Muller (cosine branch, no caching: each call
  /// consumes exactly two generator words).
  double normal();

  /// Independent stream derived from this stream's construction seed and
  /// `id`. Does not advance this stream.
  RandomStream substream(std::uint64_t id) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace graphea

#endif
