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

#ifndef GRAPHEA_DIVERSITY_HPP
#define GRAPHEA_DIVERSITY_HPP

#include <span>

#include "graphea/types.hpp"

namespace graphea {

/// Mean pairwise Euclidean distance:
///   (2 / (n * (n - 1))) * sum_{i < j} ||x_i - x_j||_2
/// Requires at least two individuals of equal dimension.
double population_diversity(std::span<const Individual> members);

/// Relative diversity change (after - before) / max(before, eps).
/// `before` and `after` must be non-negative, `eps` positive.
double diversity_delta(double before, double after, double eps = 1e-12);

/// Diversity observed at the end of a strategy window.
struct DiversityRecord {
  long long generation = 0;
  double value = 0.0;
};

}  // namespace graphea

#endif
