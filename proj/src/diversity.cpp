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

#include "graphea/diversity.hpp"

#include <cmath>
#include <stdexcept>

namespace graphea {

double population_diversity(std::span<const Individual> members) {
  const std::size_t n = members.size();
  if (n < 2)
    throw std::invalid_argument("population_diversity: need at least two individuals");
  const std::size_t dim = members[0].genes.size();
  for (const Individual& ind : members)
    if (ind.genes.size() != dim)
      throw std::invalid_argument("population_diversity: mixed gene dimensions");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = members[i].genes[k] - members[j].genes[k];
        d2 += d * d;
      }
      total += std::sqrt(d2);
    }
  }
  return total * 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double diversity_delta(double before, double after, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("diversity_delta: eps must be positive");
  if (before < 0.0 || after < 0.0)
    throw std::invalid_argument("diversity_delta: diversities are non-negative");
  return (after - before) / std::max(before, eps);
}

}  // namespace graphea
