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

#ifndef GRAPHEA_OPERATORS_HPP
#define GRAPHEA_OPERATORS_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "graphea/random.hpp"
#include "graphea/types.hpp"

namespace graphea {

enum class CrossoverKind : int {
  BlxAlpha = 0,
  Discrete,
  OnePoint,
  Linear,
  Barycentric,
};

enum class MutationKind : int {
  Levy = 0,
  Gaussian,
  DeRand1Bin,
  Scramble,
};

inline constexpr int kNumCrossovers = 5;
inline constexpr int kNumMutations = 4;
inline constexpr int kNumStrategies = kNumCrossovers * kNumMutations;

/// One node of the strategy graph: a crossover paired with a mutation.
struct Strategy {
  CrossoverKind crossover;
  MutationKind mutation;
};

/// id = crossover * 4 + mutation, ids 0..19. Throws on out-of-range ids.
Strategy strategy_from_id(int id);
int strategy_id(CrossoverKind crossover, MutationKind mutation);

/// Human-readable label, e.g. "blx+levy" for id 0.
std::string strategy_name(int id);

/// Tunable operator constants with their conventional defaults.
struct OperatorParams {
  double blx_alpha = 0.5;
  double gaussian_sigma_frac = 0.1;
  double levy_beta = 1.5;
  double levy_scale = 0.01;
  double de_f = 0.5;
  double de_cr = 0.9;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// All operators are pure given the RNG state and document their exact draw
// order; tests replay the draws on a mirrored stream. None of the crossovers
// clamp their output (the engine clamps offspring once, before evaluation);
// mutations clamp because their post-conditions promise in-bounds results.

/// BLX-alpha: per gene, child = lo + u * (hi - lo) with
/// lo = min(p1,p2) - alpha*|p1-p2|, hi = max(p1,p2) + alpha*|p1-p2|.
/// Draws: one uniform per gene for child one, then one per gene for child two.
std::pair<Vec, Vec> crossover_blx(std::span<const double> p1,
                                  std::span<const double> p2, double alpha,
                                  RandomStream& rng);

/// Discrete recombination. Draws one uniform per gene; u < 0.5 gives child
/// one the gene of p1 (child two gets the complement).
std::pair<Vec, Vec> crossover_discrete(std::span<const double> p1,
                                       std::span<const double> p2,
                                       RandomStream& rng);

/// One-point crossover at k in {1, ..., D-1}; child one is p1[0:k) + p2[k:D).
/// Draws: one index draw. Requires D >= 2.
std::pair<Vec, Vec> crossover_one_point(std::span<const double> p1,
                                        std::span<const double> p2,
                                        RandomStream& rng);

using EvalFn = std::function<double(std::span<const double>)>;

/// Wright's linear crossover: candidates 0.5*(p1+p2), 1.5*p1-0.5*p2,
/// -0.5*p1+1.5*p2 are clamped to `b`, evaluated through `fitness_of` (three
/// calls, in that order), and the best two survive; ties keep the earlier
/// candidate. Exceptions from fitness_of propagate.
std::pair<Vec, Vec> crossover_linear(std::span<const double> p1,
                                     std::span<const double> p2, const Bounds& b,
                                     const EvalFn& fitness_of);

/// Barycentric (whole arithmetic) crossover with a single shared lambda:
/// child one = lambda*p1 + (1-lambda)*p2, child two the mirror image.
/// Draws: one uniform.
std::pair<Vec, Vec> crossover_barycentric(std::span<const double> p1,
                                          std::span<const double> p2,
                                          RandomStream& rng);

/// Gaussian mutation: x_i + z_i * sigma_frac * (upper_i - lower_i), clamped.
/// Draws: one normal per gene.
Vec mutate_gaussian(std::span<const double> x, const Bounds& b,
                    double sigma_frac, RandomStream& rng);

/// Mantegna's sigma_u for Levy steps; beta must lie in (1, 2].
double mantegna_sigma(double beta);

/// Levy-flight mutation, Mantegna's algorithm:
///   step = sigma_u * z_u / |z_v|^(1/beta),  z_u, z_v ~ N(0,1)
///   x_i + scale * (upper_i - lower_i) * step, clamped.
/// Draws per gene: z_u then z_v; z_v is redrawn while |z_v| < 1e-300.
Vec mutate_levy(std::span<const double> x, const Bounds& b, double beta,
                double scale, RandomStream& rng);

/// DE/rand/1/bin trial against explicit donors:
///   trial_i = r1_i + f * (r2_i - r3_i) where u_i < cr or i == j_rand,
/// else x_i; result clamped. Draws: j_rand (one index draw), then one uniform
/// per gene (drawn for every gene so the stream position is data-independent).
Vec de_rand_1_bin_trial(std::span<const double> x, std::span<const double> r1,
                        std::span<const double> r2, std::span<const double> r3,
                        double f, double cr, const Bounds& b, RandomStream& rng);

/// DE/rand/1/bin against a population: donors r1, r2, r3 are drawn by
/// rejection (sequential index draws) to be distinct from each other and from
/// `target`, then de_rand_1_bin_trial runs. Needs at least 4 members.
Vec mutate_de_rand_1_bin(std::span<const double> x, std::size_t target,
                         std::span<const Individual> members, double f,
                         double cr, const Bounds& b, RandomStream& rng);

/// Scramble mutation: two distinct positions are drawn (second redrawn while
/// equal to the first), ordered, and the closed segment between them is
/// Fisher-Yates shuffled (for k = hi..lo+1: swap(x[k], x[lo + index(k-lo+1)])).
/// Requires D >= 2.
Vec mutate_scramble(std::span<const double> x, RandomStream& rng);

/// Component-wise projection onto the box.
void clamp_in_place(Vec& x, const Bounds& b);
Vec clamp_to_bounds(std::span<const double> x, const Bounds& b);

}  // namespace graphea

#endif
