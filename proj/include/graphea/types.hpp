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

#ifndef GRAPHEA_TYPES_HPP
#define GRAPHEA_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace graphea {

using Vec = std::vector<double>;

/// Axis-aligned box constraint, one [lower, upper] interval per gene.
struct Bounds {
  Vec lower;
  Vec upper;

  static Bounds uniform_box(int dim, double lo, double hi) {
    if (dim <= 0) throw std::invalid_argument("Bounds: dim must be positive");
    if (!(lo < hi)) throw std::invalid_argument("Bounds: lower must be below upper");
    return Bounds{Vec(static_cast<std::size_t>(dim), lo),
                  Vec(static_cast<std::size_t>(dim), hi)};
  }

  std::size_t dim() const { return lower.size(); }
};

/// A candidate solution together with its cached objective value.
struct Individual {
  Vec genes;
  double fitness = 0.0;
};

}  // namespace graphea

#endif
