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

#include "graphea/strategy_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace graphea {

StrategyGraph::StrategyGraph(int n, double eta, double w_min)
    : n_(n), eta_(eta), w_min_(w_min) {
  if (n < 2)
    throw std::invalid_argument("StrategyGraph: need at least two strategies");
  if (!(w_min > 0.0) || !(w_min < 1.0 / n))
    throw std::invalid_argument("StrategyGraph: w_min must lie in (0, 1/n)");
  if (!(eta > 0.0) || !(eta < 1.0 - n * w_min))
    throw std::invalid_argument("StrategyGraph: eta must lie in (0, 1 - n*w_min)");
  w_.assign(static_cast<std::size_t>(n) * n, 1.0 / n);
}

void StrategyGraph::check_id(int id) const {
  if (id < 0 || id >= n_)
    throw std::invalid_argument("StrategyGraph: strategy id out of range");
}

double StrategyGraph::weight(int from, int to) const {
  check_id(from);
  check_id(to);
  return w_[static_cast<std::size_t>(from) * n_ + to];
}

std::span<const double> StrategyGraph::row(int from) const {
  check_id(from);
  return {w_.data() + static_cast<std::size_t>(from) * n_,
          static_cast<std::size_t>(n_)};
}

void StrategyGraph::update(int prev, int cur, double p_hat) {
  check_id(prev);
  check_id(cur);
  if (std::isnan(p_hat))
    throw std::invalid_argument("StrategyGraph::update: p_hat is NaN");
  const double a = eta_ * std::min(std::abs(p_hat), 1.0);
  if (a == 0.0) return;
  double& entry = w_[static_cast<std::size_t>(prev) * n_ + cur];
  entry += p_hat > 0.0 ? a : -a;
  if (entry < w_min_) entry = w_min_;
  renormalize_row(prev);
}

void StrategyGraph::renormalize_row(int r) {
  double* row = w_.data() + static_cast<std::size_t>(r) * n_;
  const double sum = std::accumulate(row, row + n_, 0.0);
  const double floor_total = n_ * w_min_;
  const double slack = sum - floor_total;
  const double target = 1.0 - floor_total;
  if (!(slack > 0.0)) {
    // Whole row at the floor; only reachable through pathological input.
    std::fill(row, row + n_, 1.0 / n_);
    return;
  }
  const double scale = target / slack;
  for (int j = 0; j < n_; ++j) row[j] = w_min_ + (row[j] - w_min_) * scale;
}

int StrategyGraph::select_next(int cur, SelectMode mode, double epsilon,
                               RandomStream& rng) const {
  check_id(cur);
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("StrategyGraph: epsilon must lie in [0, 1]");
  const double* row = w_.data() + static_cast<std::size_t>(cur) * n_;
  if (mode == SelectMode::Map) {
    if (epsilon > 0.0 && rng.uniform() < epsilon)
      return static_cast<int>(rng.index(static_cast<std::size_t>(n_)));
    int best = 0;
    for (int j = 1; j < n_; ++j)
      if (row[j] > row[best]) best = j;
    return best;
  }
  const double total = std::accumulate(row, row + n_, 0.0);
  const double u = rng.uniform() * total;
  double cum = 0.0;
  for (int j = 0; j < n_; ++j) {
    cum += row[j];
    if (u < cum) return j;
  }
  return n_ - 1;  // guards the fp residue when u lands on the top edge
}

}  // namespace graphea
