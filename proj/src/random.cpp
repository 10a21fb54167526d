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

#include "graphea/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace graphea {

namespace {

// splitmix64 finalizer; decorrelates nearby seeds before they reach the
// engine so seed, seed+1, ... give unrelated streams.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), gen_(mix64(seed)) {}

double RandomStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

std::size_t RandomStream::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("RandomStream::index: n must be positive");
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  // Reject the low (2^64 mod n) raw values so every residue is equally likely.
  const std::uint64_t threshold = (0ULL - m) % m;
  for (;;) {
    const std::uint64_t x = gen_();
    if (x >= threshold) return static_cast<std::size_t>(x % m);
  }
}

double RandomStream::normal() {
  // u1 lies in (0, 1] so the log is finite.
  const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RandomStream RandomStream::substream(std::uint64_t id) const {
  return RandomStream(mix64(seed_ ^ (0xA3EC647659359ACDULL * (id + 1))));
}

}  // namespace graphea
