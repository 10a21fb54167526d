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

#include "graphea/engine.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>

namespace graphea {

void EngineConfig::validate() const {
  make_function(function, dim);  // rejects unknown ids and dim < 1
  if (dim < 2)
    throw std::invalid_argument("config: dim must be at least 2");
  if (budget <= 0)
    throw std::invalid_argument("config: budget must be positive");
  if (pop < 4)
    throw std::invalid_argument("config: pop must be at least 4");
  if (budget < pop)
    throw std::invalid_argument("config: budget must cover the initial population");
  if (delta < 1)
    throw std::invalid_argument("config: delta must be at least 1");
  if (!(cr >= 0.0 && cr <= 1.0))
    throw std::invalid_argument("config: cr must lie in [0, 1]");
  if (!(mu >= 0.0 && mu <= 1.0))
    throw std::invalid_argument("config: mu must lie in [0, 1]");
  if (!adaptive && (static_strategy < 0 || static_strategy >= kNumStrategies))
    throw std::invalid_argument("config: static strategy id must lie in [0, 20)");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("config: epsilon must lie in [0, 1]");
  if (adaptive) {
    // Same constraints the graph constructor enforces, reported early.
    if (!(w_min > 0.0) || !(w_min < 1.0 / kNumStrategies))
      throw std::invalid_argument("config: w_min must lie in (0, 1/20)");
    if (!(eta > 0.0) || !(eta < 1.0 - kNumStrategies * w_min))
      throw std::invalid_argument("config: eta must lie in (0, 1 - 20*w_min)");
  }
  operators.validate();
}

BudgetedEvaluator::BudgetedEvaluator(const BenchmarkFn& fn, long long budget)
    : fn_(fn), budget_(budget) {
  if (budget <= 0)
    throw std::invalid_argument("BudgetedEvaluator: budget must be positive");
}

double BudgetedEvaluator::operator()(std::span<const double> x) {
  if (used_ >= budget_) throw BudgetExhausted{};
  const double f = evaluate(fn_, x);
  ++used_;
  if (f < best_fitness_) {
    best_fitness_ = f;
    best_genes_.assign(x.begin(), x.end());
  }
  return f;
}

Population init_population(const EngineConfig& cfg, const Bounds& b,
                           BudgetedEvaluator& eval, RandomStream& rng) {
  if (eval.budget() - eval.evals_used() < cfg.pop)
    throw std::invalid_argument("init_population: budget smaller than population");
  Population pop;
  pop.members.resize(static_cast<std::size_t>(cfg.pop));
  for (Individual& ind : pop.members) {
    ind.genes.resize(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
      ind.genes[i] = rng.uniform(b.lower[i], b.upper[i]);
    ind.fitness = eval(ind.genes);
  }
  return pop;
}

std::size_t tournament_select(const Population& pop, RandomStream& rng) {
  const std::size_t n = pop.members.size();
  if (n < 2)
    throw std::invalid_argument("tournament_select: need at least two members");
  const std::size_t i = rng.index(n);
  const std::size_t j = rng.index(n);
  return pop.members[j].fitness < pop.members[i].fitness ? j : i;
}

namespace {

std::pair<Vec, Vec> apply_crossover(CrossoverKind kind, const Vec& p1,
                                    const Vec& p2, const EngineConfig& cfg,
                                    const Bounds& b, BudgetedEvaluator& eval,
                                    RandomStream& rng) {
  switch (kind) {
    case CrossoverKind::BlxAlpha:
      return crossover_blx(p1, p2, cfg.operators.blx_alpha, rng);
    case CrossoverKind::Discrete:
      return crossover_discrete(p1, p2, rng);
    case CrossoverKind::OnePoint:
      return crossover_one_point(p1, p2, rng);
    case CrossoverKind::Linear:
      return crossover_linear(p1, p2, b,
                              [&eval](std::span<const double> x) { return eval(x); });
    case CrossoverKind::Barycentric:
      return crossover_barycentric(p1, p2, rng);
  }
  throw std::invalid_argument("apply_crossover: unknown kind");
}

Vec apply_mutation(MutationKind kind, Vec&& genes, std::size_t parent_index,
                   const Population& pop, const EngineConfig& cfg,
                   const Bounds& b, RandomStream& rng) {
  switch (kind) {
    case MutationKind::Levy:
      return mutate_levy(genes, b, cfg.operators.levy_beta,
                         cfg.operators.levy_scale, rng);
    case MutationKind::Gaussian:
      return mutate_gaussian(genes, b, cfg.operators.gaussian_sigma_frac, rng);
    case MutationKind::DeRand1Bin:
      return mutate_de_rand_1_bin(genes, parent_index, pop.members,
                                  cfg.operators.de_f, cfg.operators.de_cr, b,
                                  rng);
    case MutationKind::Scramble:
      return mutate_scramble(genes, rng);
  }
  throw std::invalid_argument("apply_mutation: unknown kind");
}

// (mu+lambda) truncation with forced elitism: keep the best pop of
// parents + offspring. stable_sort with parents listed first makes survivors
// deterministic under fitness ties, and the best parent is reinstated (over
// the worst survivor) if truncation dropped it.
void replace_truncation(Population& pop, std::vector<Individual>& offspring) {
  const std::size_t n = pop.members.size();
  std::size_t best_parent = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (pop.members[i].fitness < pop.members[best_parent].fitness) best_parent = i;

  std::vector<Individual> pool;
  pool.reserve(n + offspring.size());
  std::move(pop.members.begin(), pop.members.end(), std::back_inserter(pool));
  std::move(offspring.begin(), offspring.end(), std::back_inserter(pool));

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&pool](std::size_t a, std::size_t c) {
    return pool[a].fitness < pool[c].fitness;
  });

  bool elite_kept = false;
  for (std::size_t k = 0; k < n; ++k) elite_kept |= order[k] == best_parent;
  if (!elite_kept) order[n - 1] = best_parent;

  std::vector<Individual> next;
  next.reserve(n);
  for (std::size_t k = 0; k < n; ++k) next.push_back(std::move(pool[order[k]]));
  pop.members = std::move(next);
}

}  // namespace

bool step_generation(Population& pop, const Strategy& strat,
                     const EngineConfig& cfg, const Bounds& b,
                     BudgetedEvaluator& eval, RandomStream& rng) {
  const std::size_t n = pop.members.size();
  std::vector<Individual> offspring;
  offspring.reserve(n);
  bool completed = true;
  try {
    while (offspring.size() < n) {
      const std::size_t i1 = tournament_select(pop, rng);
      const std::size_t i2 = tournament_select(pop, rng);
      std::pair<Vec, Vec> children;
      if (rng.uniform() < cfg.cr) {
        children = apply_crossover(strat.crossover, pop.members[i1].genes,
                                   pop.members[i2].genes, cfg, b, eval, rng);
      } else {
        children = {pop.members[i1].genes, pop.members[i2].genes};
      }
      const std::array<std::pair<Vec*, std::size_t>, 2> slots{
          {{&children.first, i1}, {&children.second, i2}}};
      for (const auto& [genes, parent_index] : slots) {
        if (offspring.size() >= n) break;
        Vec child = std::move(*genes);
        if (rng.uniform() < cfg.mu)
          child = apply_mutation(strat.mutation, std::move(child), parent_index,
                                 pop, cfg, b, rng);
        clamp_in_place(child, b);
        const double f = eval(child);
        offspring.push_back(Individual{std::move(child), f});
      }
    }
  } catch (const BudgetExhausted&) {
    completed = false;  // keep what was evaluated; the half-built child is dropped
  }
  replace_truncation(pop, offspring);
  return completed;
}

RunRecord run(const EngineConfig& cfg) {
  cfg.validate();
  const BenchmarkFn fn = make_function(cfg.function, cfg.dim);
  const Bounds b = bounds(fn);
  RandomStream rng(cfg.seed);
  BudgetedEvaluator eval(fn, cfg.budget);
  RunRecord rec;

  const auto t0 = std::chrono::steady_clock::now();
  Population pop = init_population(cfg, b, eval, rng);

  std::optional<StrategyGraph> graph;
  int cur = cfg.static_strategy;
  if (cfg.adaptive) {
    graph.emplace(kNumStrategies, cfg.eta, cfg.w_min);
    cur = static_cast<int>(rng.index(kNumStrategies));
  }
  int prev = cur;
  rec.strategy_trajectory.push_back({1, cur});
  if (cfg.record_trace)
    rec.trace.push_back({0, eval.best_fitness(),
                         population_diversity(pop.members), cur});

  double prev_div = 0.0;
  bool have_prev_div = false;
  long long g = 0;
  while (!eval.exhausted()) {
    const Strategy strat = strategy_from_id(cur);
    step_generation(pop, strat, cfg, b, eval, rng);
    ++g;
    double div = std::numeric_limits<double>::quiet_NaN();
    if (cfg.record_trace) {
      div = population_diversity(pop.members);
      rec.trace.push_back({g, eval.best_fitness(), div, cur});
    }
    const bool boundary = g % cfg.delta == 0;
    if (boundary && (cfg.adaptive || cfg.record_trace)) {
      if (std::isnan(div)) div = population_diversity(pop.members);
      rec.diversity_trace.push_back({g, div});
    }
    if (cfg.adaptive && boundary) {
      if (have_prev_div) graph->update(prev, cur, diversity_delta(prev_div, div));
      if (cfg.record_graph)
        rec.graph_snapshots.push_back({g, kNumStrategies, graph->weights()});
      const int next = graph->select_next(cur, cfg.select, cfg.epsilon, rng);
      prev = cur;
      cur = next;
      prev_div = div;
      have_prev_div = true;
      rec.strategy_trajectory.push_back({g / cfg.delta + 1, cur});
    }
  }

  // One trajectory entry per started window: a final entry whose window never
  // began is dropped, and static runs (which never push) are padded.
  const long long windows = (g + cfg.delta - 1) / cfg.delta;
  while (static_cast<long long>(rec.strategy_trajectory.size()) > windows)
    rec.strategy_trajectory.pop_back();
  while (static_cast<long long>(rec.strategy_trajectory.size()) < windows)
    rec.strategy_trajectory.push_back(
        {static_cast<long long>(rec.strategy_trajectory.size()) + 1, cur});

  rec.best_genes = eval.best_genes();
  rec.best_fitness = eval.best_fitness();
  rec.evals_used = eval.evals_used();
  rec.generations_run = g;
  rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rec;
}

}  // namespace graphea
