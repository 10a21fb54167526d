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

#ifndef GRAPHEA_STRATEGY_GRAPH_HPP
#define GRAPHEA_STRATEGY_GRAPH_HPP

#include <span>
#include <vector>

#include "graphea/random.hpp"

namespace graphea {

enum class SelectMode : int {
  Map = 0,    // argmax of the current row, with epsilon-uniform exploration
  Sample = 1, // categorical draw proportional to the current row
};

// Fully connected directed transition graph over the strategy set. Row i
// holds the outgoing arc weights of strategy i; every row stays a probability
// vector with each entry floored at w_min, so no transition ever becomes
// unreachable.
class StrategyGraph {
 public:
  /// n >= 2 strategies, uniform rows (1/n everywhere). Constraints:
  /// 0 < w_min < 1/n and 0 < eta < 1 - n*w_min (keeps updated rows
  /// renormalizable above the floor).
  StrategyGraph(int n, double eta, double w_min);

  /// Reward or punish the arc prev -> cur with the relative diversity change
  /// p_hat: the arc weight moves by a = eta * min(|p_hat|, 1) in the
  /// direction of the sign, is floored at w_min, and the row's slack above
  /// the floor is rescaled so the row sums to one again. p_hat == 0 leaves
  /// the graph untouched.
  void update(int prev, int cur, double p_hat);

  /// Next strategy, following the row of `cur` under `mode`. Map draws one
  /// uniform only when epsilon > 0 (explore uniformly with probability
  /// epsilon, otherwise take the lowest-index argmax); Sample draws one
  /// uniform and walks the cumulative row.
  int select_next(int cur, SelectMode mode, double epsilon,
                  RandomStream& rng) const;

  int size() const { return n_; }
  double eta() const { return eta_; }
  double w_min() const { return w_min_; }

  double weight(int from, int to) const;
  std::span<const double> row(int from) const;
  /// Row-major copy of the full matrix.
  std::vector<double> weights() const { return w_; }

 private:
  void check_id(int id) const;
  void renormalize_row(int r);

  int n_;
  double eta_;
  double w_min_;
  std::vector<double> w_;
};

}  // namespace graphea

#endif
