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

#include "graphea/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphea {

namespace {

constexpr const char* kCrossoverNames[kNumCrossovers] = {
    "blx", "discrete", "onepoint", "linear", "barycentric"};
constexpr const char* kMutationNames[kNumMutations] = {
    "levy", "gaussian", "de", "scramble"};

void require_same_dim(std::span<const double> p1, std::span<const double> p2) {
  if (p1.size() != p2.size() || p1.empty())
    throw std::invalid_argument("crossover: parents must share a non-zero dimension");
}

void require_bounds_dim(std::span<const double> x, const Bounds& b,
                        const char* who) {
  if (x.size() != b.dim() || b.upper.size() != b.dim())
    throw std::invalid_argument(std::string(who) + ": bounds dimension mismatch");
}

}  // namespace

Strategy strategy_from_id(int id) {
  if (id < 0 || id >= kNumStrategies)
    throw std::invalid_argument("strategy_from_id: id must lie in [0, 20)");
  return Strategy{static_cast<CrossoverKind>(id / kNumMutations),
                  static_cast<MutationKind>(id % kNumMutations)};
}

int strategy_id(CrossoverKind crossover, MutationKind mutation) {
  return static_cast<int>(crossover) * kNumMutations + static_cast<int>(mutation);
}

std::string strategy_name(int id) {
  const Strategy s = strategy_from_id(id);
  return std::string(kCrossoverNames[static_cast<int>(s.crossover)]) + "+" +
         kMutationNames[static_cast<int>(s.mutation)];
}

void OperatorParams::validate() const {
  if (!(blx_alpha > 0.0))
    throw std::invalid_argument("operator params: alpha must be positive");
  if (!(gaussian_sigma_frac > 0.0))
    throw std::invalid_argument("operator params: sigma_frac must be positive");
  if (!(levy_beta > 1.0) || !(levy_beta <= 2.0))
    throw std::invalid_argument("operator params: levy_beta must lie in (1, 2]");
  if (!(levy_scale > 0.0))
    throw std::invalid_argument("operator params: levy_scale must be positive");
  if (!(de_f > 0.0) || !(de_f <= 2.0))
    throw std::invalid_argument("operator params: de_f must lie in (0, 2]");
  if (!(de_cr >= 0.0) || !(de_cr <= 1.0))
    throw std::invalid_argument("operator params: de_cr must lie in [0, 1]");
}

std::pair<Vec, Vec> crossover_blx(std::span<const double> p1,
                                  std::span<const double> p2, double alpha,
                                  RandomStream& rng) {
  require_same_dim(p1, p2);
  const std::size_t d = p1.size();
  std::pair<Vec, Vec> children{Vec(d), Vec(d)};
  for (Vec* child : {&children.first, &children.second}) {
    for (std::size_t i = 0; i < d; ++i) {
      const double span = std::abs(p1[i] - p2[i]);
      const double lo = std::min(p1[i], p2[i]) - alpha * span;
      const double hi = std::max(p1[i], p2[i]) + alpha * span;
      (*child)[i] = lo + rng.uniform() * (hi - lo);
    }
  }
  return children;
}

std::pair<Vec, Vec> crossover_discrete(std::span<const double> p1,
                                       std::span<const double> p2,
                                       RandomStream& rng) {
  require_same_dim(p1, p2);
  const std::size_t d = p1.size();
  std::pair<Vec, Vec> children{Vec(d), Vec(d)};
  for (std::size_t i = 0; i < d; ++i) {
    const bool keep = rng.uniform() < 0.5;
    children.first[i] = keep ? p1[i] : p2[i];
    children.second[i] = keep ? p2[i] : p1[i];
  }
  return children;
}

std::pair<Vec, Vec> crossover_one_point(std::span<const double> p1,
                                        std::span<const double> p2,
                                        RandomStream& rng) {
  require_same_dim(p1, p2);
  const std::size_t d = p1.size();
  if (d < 2)
    throw std::invalid_argument("crossover_one_point: needs at least two genes");
  const std::size_t k = 1 + rng.index(d - 1);
  std::pair<Vec, Vec> children{Vec(d), Vec(d)};
  for (std::size_t i = 0; i < d; ++i) {
    children.first[i] = i < k ? p1[i] : p2[i];
    children.second[i] = i < k ? p2[i] : p1[i];
  }
  return children;
}

std::pair<Vec, Vec> crossover_linear(std::span<const double> p1,
                                     std::span<const double> p2, const Bounds& b,
                                     const EvalFn& fitness_of) {
  require_same_dim(p1, p2);
  require_bounds_dim(p1, b, "crossover_linear");
  if (!fitness_of)
    throw std::invalid_argument("crossover_linear: fitness_of must be callable");
  const std::size_t d = p1.size();
  std::array<Vec, 3> cand{Vec(d), Vec(d), Vec(d)};
  for (std::size_t i = 0; i < d; ++i) {
    cand[0][i] = 0.5 * (p1[i] + p2[i]);
    cand[1][i] = 1.5 * p1[i] - 0.5 * p2[i];
    cand[2][i] = -0.5 * p1[i] + 1.5 * p2[i];
  }
  std::array<double, 3> fit{};
  for (std::size_t c = 0; c < 3; ++c) {
    clamp_in_place(cand[c], b);
    fit[c] = fitness_of(cand[c]);
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return fit[a] < fit[c]; });
  return {std::move(cand[order[0]]), std::move(cand[order[1]])};
}

std::pair<Vec, Vec> crossover_barycentric(std::span<const double> p1,
                                          std::span<const double> p2,
                                          RandomStream& rng) {
  require_same_dim(p1, p2);
  const std::size_t d = p1.size();
  const double lambda = rng.uniform();
  std::pair<Vec, Vec> children{Vec(d), Vec(d)};
  for (std::size_t i = 0; i < d; ++i) {
    children.first[i] = lambda * p1[i] + (1.0 - lambda) * p2[i];
    children.second[i] = (1.0 - lambda) * p1[i] + lambda * p2[i];
  }
  return children;
}

Vec mutate_gaussian(std::span<const double> x, const Bounds& b,
                    double sigma_frac, RandomStream& rng) {
  require_bounds_dim(x, b, "mutate_gaussian");
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += rng.normal() * sigma_frac * (b.upper[i] - b.lower[i]);
  clamp_in_place(out, b);
  return out;
}

double mantegna_sigma(double beta) {
  if (!(beta > 1.0) || !(beta <= 2.0))
    throw std::invalid_argument("mantegna_sigma: beta must lie in (1, 2]");
  const double pi = std::numbers::pi;
  const double num = std::tgamma(1.0 + beta) * std::sin(pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

Vec mutate_levy(std::span<const double> x, const Bounds& b, double beta,
                double scale, RandomStream& rng) {
  require_bounds_dim(x, b, "mutate_levy");
  const double sigma_u = mantegna_sigma(beta);
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double zu = rng.normal();
    double zv = rng.normal();
    while (std::abs(zv) < 1e-300) zv = rng.normal();
    const double step = sigma_u * zu / std::pow(std::abs(zv), 1.0 / beta);
    out[i] += scale * (b.upper[i] - b.lower[i]) * step;
  }
  clamp_in_place(out, b);
  return out;
}

Vec de_rand_1_bin_trial(std::span<const double> x, std::span<const double> r1,
                        std::span<const double> r2, std::span<const double> r3,
                        double f, double cr, const Bounds& b,
                        RandomStream& rng) {
  const std::size_t d = x.size();
  if (r1.size() != d || r2.size() != d || r3.size() != d || d == 0)
    throw std::invalid_argument("de_rand_1_bin_trial: donor dimension mismatch");
  require_bounds_dim(x, b, "de_rand_1_bin_trial");
  const std::size_t j_rand = rng.index(d);
  Vec trial(x.begin(), x.end());
  for (std::size_t i = 0; i < d; ++i) {
    const double u = rng.uniform();
    if (u < cr || i == j_rand) trial[i] = r1[i] + f * (r2[i] - r3[i]);
  }
  clamp_in_place(trial, b);
  return trial;
}

Vec mutate_de_rand_1_bin(std::span<const double> x, std::size_t target,
                         std::span<const Individual> members, double f,
                         double cr, const Bounds& b, RandomStream& rng) {
  const std::size_t n = members.size();
  if (n < 4)
    throw std::invalid_argument("mutate_de_rand_1_bin: needs at least 4 members");
  if (target >= n)
    throw std::invalid_argument("mutate_de_rand_1_bin: target index out of range");
  std::size_t r1 = rng.index(n);
  while (r1 == target) r1 = rng.index(n);
  std::size_t r2 = rng.index(n);
  while (r2 == target || r2 == r1) r2 = rng.index(n);
  std::size_t r3 = rng.index(n);
  while (r3 == target || r3 == r1 || r3 == r2) r3 = rng.index(n);
  return de_rand_1_bin_trial(x, members[r1].genes, members[r2].genes,
                             members[r3].genes, f, cr, b, rng);
}

Vec mutate_scramble(std::span<const double> x, RandomStream& rng) {
  const std::size_t d = x.size();
  if (d < 2)
    throw std::invalid_argument("mutate_scramble: needs at least two genes");
  std::size_t lo = rng.index(d);
  std::size_t hi = rng.index(d);
  while (hi == lo) hi = rng.index(d);
  if (lo > hi) std::swap(lo, hi);
  Vec out(x.begin(), x.end());
  for (std::size_t k = hi; k > lo; --k) {
    const std::size_t j = lo + rng.index(k - lo + 1);
    std::swap(out[k], out[j]);
  }
  return out;
}

void clamp_in_place(Vec& x, const Bounds& b) {
  require_bounds_dim(x, b, "clamp");
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = std::min(b.upper[i], std::max(b.lower[i], x[i]));
}

Vec clamp_to_bounds(std::span<const double> x, const Bounds& b) {
  Vec out(x.begin(), x.end());
  clamp_in_place(out, b);
  return out;
}

}  // namespace graphea
