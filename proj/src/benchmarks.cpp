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

// Benchmark suite. All functions are minimized; indices below are 1-based.
//
//   sphere         sum x_i^2                                       box +-100
//   schwefel12     sum_i (sum_{j<=i} x_j)^2                        box +-100
//   schwefel221    max_i |x_i|                                     box +-100
//   griewank       1 + sum x_i^2/4000 - prod cos(x_i/sqrt(i))      box +-600
//   elliptic       sum (1e6)^((i-1)/(D-1)) x_i^2                   box +-100
//   zakharov       sum x_i^2 + s^2 + s^4, s = sum 0.5*i*x_i        box +-10
//   cosmix         0.1*D - 0.1*sum cos(5*pi*x_i) + sum x_i^2       box +-1
//   levymontalvo2  0.1*(sin^2(3*pi*x_1)
//                    + sum_{i<D} (x_i-1)^2 (1+sin^2(3*pi*x_{i+1}))
//                    + (x_D-1)^2 (1+sin^2(2*pi*x_D)))              box +-5
//   neumaier3      sum (x_i-1)^2 - sum_{i>=2} x_i*x_{i-1}          box +-D^2
//   periodic       1 + sum sin^2(x_i) - 0.1*exp(-sum x_i^2)        box +-10
//   michalewicz    -sum sin(x_i) sin^20(i*x_i^2/pi)                box [0,pi]
//   alpine         sum |x_i sin(x_i) + 0.1 x_i|                    box +-10
//
// Minima: 0 at the origin for sphere, schwefel12, schwefel221, griewank,
// elliptic, zakharov, cosmix and alpine; 0 at (1,...,1) for levymontalvo2;
// -D(D+4)(D-1)/6 at x_i = i(D+1-i) for neumaier3; 0.9 at the origin for
// periodic. The michalewicz optimum has no closed form and is reported as
// unknown.

#include "graphea/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphea {

namespace {

struct FunctionInfo {
  FunctionId id;
  const char* name;
  double lower;
  double upper;
};

constexpr std::array<FunctionInfo, kFunctionCount> kFunctions{{
    {FunctionId::Sphere, "sphere", -100.0, 100.0},
    {FunctionId::Schwefel12, "schwefel12", -100.0, 100.0},
    {FunctionId::Schwefel221, "schwefel221", -100.0, 100.0},
    {FunctionId::Griewank, "griewank", -600.0, 600.0},
    {FunctionId::Elliptic, "elliptic", -100.0, 100.0},
    {FunctionId::Zakharov, "zakharov", -10.0, 10.0},
    {FunctionId::CosineMixture, "cosmix", -1.0, 1.0},
    {FunctionId::LevyMontalvo2, "levymontalvo2", -5.0, 5.0},
    {FunctionId::Neumaier3, "neumaier3", 0.0, 0.0},  // box is +-D^2, filled below
    {FunctionId::Periodic, "periodic", -10.0, 10.0},
    {FunctionId::Michalewicz, "michalewicz", 0.0, std::numbers::pi},
    {FunctionId::Alpine, "alpine", -10.0, 10.0},
}};

const FunctionInfo& info(FunctionId id) {
  const int k = static_cast<int>(id);
  if (k < 0 || k >= kFunctionCount)
    throw std::invalid_argument("benchmarks: unknown function id");
  return kFunctions[static_cast<std::size_t>(k)];
}

double sq(double v) { return v * v; }

double eval_sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double eval_schwefel12(std::span<const double> x) {
  double s = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double eval_schwefel221(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double eval_griewank(std::span<const double> x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + s / 4000.0 - p;
}

double eval_elliptic(std::span<const double> x) {
  const std::size_t d = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double e = d > 1 ? static_cast<double>(i) / static_cast<double>(d - 1) : 0.0;
    s += std::pow(1e6, e) * x[i] * x[i];
  }
  return s;
}

double eval_zakharov(std::span<const double> x) {
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s1 += x[i] * x[i];
    s2 += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return s1 + sq(s2) + sq(sq(s2));
}

double eval_cosmix(std::span<const double> x) {
  double c = 0.0, s = 0.0;
  for (double v : x) {
    c += std::cos(5.0 * std::numbers::pi * v);
    s += v * v;
  }
  return 0.1 * static_cast<double>(x.size()) - 0.1 * c + s;
}

double eval_levymontalvo2(std::span<const double> x) {
  const std::size_t d = x.size();
  const double pi = std::numbers::pi;
  double s = sq(std::sin(3.0 * pi * x[0]));
  for (std::size_t i = 0; i + 1 < d; ++i)
    s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
  s += sq(x[d - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[d - 1])));
  return 0.1 * s;
}

double eval_neumaier3(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += sq(v - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i - 1];
  return s;
}

double eval_periodic(std::span<const double> x) {
  double s = 0.0, q = 0.0;
  for (double v : x) {
    s += sq(std::sin(v));
    q += v * v;
  }
  return 1.0 + s - 0.1 * std::exp(-q);
}

double eval_michalewicz(std::span<const double> x) {
  const double pi = std::numbers::pi;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
    s += std::sin(x[i]) * std::pow(a, 20.0);
  }
  return -s;
}

double eval_alpine(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v * std::sin(v) + 0.1 * v);
  return s;
}

}  // namespace

BenchmarkFn make_function(FunctionId id, int dim) {
  if (dim < 1) throw std::invalid_argument("make_function: dim must be at least 1");
  const FunctionInfo& fi = info(id);
  BenchmarkFn fn{id, dim, fi.lower, fi.upper, std::nullopt};
  if (id == FunctionId::Neumaier3) {
    const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
    fn.lower = -d2;
    fn.upper = d2;
  }
  switch (id) {
    case FunctionId::Neumaier3: {
      const double d = dim;
      fn.reference_optimum = -d * (d + 4.0) * (d - 1.0) / 6.0;
      break;
    }
    case FunctionId::Periodic:
      fn.reference_optimum = 0.9;
      break;
    case FunctionId::Michalewicz:
      fn.reference_optimum = std::nullopt;
      break;
    default:
      fn.reference_optimum = 0.0;
      break;
  }
  return fn;
}

std::vector<BenchmarkFn> list_functions(int dim) {
  std::vector<BenchmarkFn> out;
  out.reserve(kFunctionCount);
  for (const FunctionInfo& fi : kFunctions) out.push_back(make_function(fi.id, dim));
  return out;
}

std::string_view function_name(FunctionId id) { return info(id).name; }

std::optional<FunctionId> function_from_name(std::string_view name) {
  for (const FunctionInfo& fi : kFunctions)
    if (name == fi.name) return fi.id;
  return std::nullopt;
}

std::string valid_function_names() {
  std::string out;
  for (const FunctionInfo& fi : kFunctions) {
    if (!out.empty()) out += ", ";
    out += fi.name;
  }
  return out;
}

double evaluate(const BenchmarkFn& fn, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(fn.dim))
    throw std::invalid_argument("evaluate: point dimension does not match the function");
  for (double v : x)
    if (!std::isfinite(v))
      throw std::invalid_argument("evaluate: point has a non-finite component");
  switch (fn.id) {
    case FunctionId::Sphere: return eval_sphere(x);
    case FunctionId::Schwefel12: return eval_schwefel12(x);
    case FunctionId::Schwefel221: return eval_schwefel221(x);
    case FunctionId::Griewank: return eval_griewank(x);
    case FunctionId::Elliptic: return eval_elliptic(x);
    case FunctionId::Zakharov: return eval_zakharov(x);
    case FunctionId::CosineMixture: return eval_cosmix(x);
    case FunctionId::LevyMontalvo2: return eval_levymontalvo2(x);
    case FunctionId::Neumaier3: return eval_neumaier3(x);
    case FunctionId::Periodic: return eval_periodic(x);
    case FunctionId::Michalewicz: return eval_michalewicz(x);
    case FunctionId::Alpine: return eval_alpine(x);
  }
  throw std::invalid_argument("benchmarks: unknown function id");
}

Bounds bounds(const BenchmarkFn& fn) {
  return Bounds::uniform_box(fn.dim, fn.lower, fn.upper);
}

std::optional<Vec> known_optimizer(FunctionId id, int dim) {
  if (dim < 1) throw std::invalid_argument("known_optimizer: dim must be at least 1");
  const std::size_t d = static_cast<std::size_t>(dim);
  switch (id) {
    case FunctionId::LevyMontalvo2:
      return Vec(d, 1.0);
    case FunctionId::Neumaier3: {
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i) {
        const double k = static_cast<double>(i + 1);
        x[i] = k * (static_cast<double>(dim) + 1.0 - k);
      }
      return x;
    }
    case FunctionId::Michalewicz:
      return std::nullopt;
    default:
      return Vec(d, 0.0);
  }
}

}  // namespace graphea
