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

#ifndef GRAPHEA_ENGINE_HPP
#define GRAPHEA_ENGINE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphea/benchmarks.hpp"
#include "graphea/diversity.hpp"
#include "graphea/operators.hpp"
#include "graphea/random.hpp"
#include "graphea/strategy_graph.hpp"
#include "graphea/types.hpp"

namespace graphea {

/// Everything one optimization run depends on. Defaults follow the standard
/// experimental protocol.
struct EngineConfig {
  FunctionId function = FunctionId::Sphere;
  int dim = 40;
  long long budget = 40000;  // total objective evaluations, including init
  int pop = 50;
  int delta = 20;    // generations per strategy window
  double cr = 0.7;   // crossover probability per parent pair
  double mu = 0.3;   // mutation probability per offspring
  bool adaptive = true;
  int static_strategy = 0;  // used when adaptive == false
  SelectMode select = SelectMode::Map;
  double epsilon = 0.05;
  double eta = 0.1;
  double w_min = 0.01;
  OperatorParams operators;
  std::uint64_t seed = 1;
  bool record_trace = false;  // per-generation best/diversity/strategy rows
  bool record_graph = false;  // weight-matrix snapshot at each window boundary

  /// Throws std::invalid_argument naming the offending field. Notable
  /// constraints: dim >= 2 (one-point crossover and scramble mutation need
  /// two genes), pop >= 4 (DE donors), budget >= pop (initialization cost).
  void validate() const;
};

/// Signals that the evaluation budget ran out mid-step. Internal control
/// flow: run() converts it into clean termination.
struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("objective evaluation budget exhausted") {}
};

/// Counts every objective call against the budget and tracks the best point
/// seen. Throws BudgetExhausted when a call would exceed the budget, so
/// evals_used() can never pass budget().
class BudgetedEvaluator {
 public:
  BudgetedEvaluator(const BenchmarkFn& fn, long long budget);

  double operator()(std::span<const double> x);

  long long budget() const { return budget_; }
  long long evals_used() const { return used_; }
  bool exhausted() const { return used_ >= budget_; }
  double best_fitness() const { return best_fitness_; }
  const Vec& best_genes() const { return best_genes_; }

 private:
  BenchmarkFn fn_;
  long long budget_;
  long long used_ = 0;
  double best_fitness_ = std::numeric_limits<double>::infinity();
  Vec best_genes_;
};

struct Population {
  std::vector<Individual> members;
};

/// Uniform sample of cfg.pop points in the search box, all evaluated
/// (cfg.pop budget charges). Draw order: member by member, gene by gene.
Population init_population(const EngineConfig& cfg, const Bounds& b,
                           BudgetedEvaluator& eval, RandomStream& rng);

/// Binary tournament: two index draws (independent, may collide); the lower
/// fitness wins, ties keep the first-drawn index.
std::size_t tournament_select(const Population& pop, RandomStream& rng);

/// One generation under a fixed strategy: tournament parent pairs produce
/// children (crossover fires with probability cr, otherwise the pair is
/// copied; mutation fires per child with probability mu), children are
/// clamped and evaluated, and (mu+lambda) truncation keeps the best pop of
/// parents plus offspring, always retaining the best parent. Returns false
/// when the budget ran out mid-generation; the offspring evaluated so far
/// still enter replacement, so the population stays valid.
bool step_generation(Population& pop, const Strategy& strat,
                     const EngineConfig& cfg, const Bounds& b,
                     BudgetedEvaluator& eval, RandomStream& rng);

struct TraceRow {
  long long generation = 0;
  double best_fitness = 0.0;
  double diversity = 0.0;
  int strategy_id = 0;
};

struct GraphSnapshot {
  long long generation = 0;
  int n = 0;
  std::vector<double> weights;  // row-major n*n
};

struct StrategyWindow {
  long long window = 0;  // 1-based
  int strategy_id = 0;
};

struct RunRecord {
  Vec best_genes;
  double best_fitness = std::numeric_limits<double>::infinity();
  long long evals_used = 0;
  long long generations_run = 0;
  double wall_time_ms = 0.0;
  std::vector<StrategyWindow> strategy_trajectory;  // one entry per window
  std::vector<DiversityRecord> diversity_trace;     // at window boundaries
  std::vector<TraceRow> trace;                      // when record_trace
  std::vector<GraphSnapshot> graph_snapshots;       // when record_graph
};

/// Full optimization run:
///  - initialize and evaluate the population, start from a uniformly drawn
///    strategy (adaptive) or the configured one (static);
///  - every delta generations (adaptive): measure diversity, reward the
///    previous window's arc with the relative change versus the prior
///    boundary (first boundary has no predecessor, so the first update
///    happens at generation 2*delta), then pick the next strategy;
///  - stop when evals_used reaches the budget.
/// The trajectory always has ceil(generations_run / delta) entries.
RunRecord run(const EngineConfig& cfg);

}  // namespace graphea

#endif
