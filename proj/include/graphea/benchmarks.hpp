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

#ifndef GRAPHEA_BENCHMARKS_HPP
#define GRAPHEA_BENCHMARKS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphea/types.hpp"

namespace graphea {

enum class FunctionId : int {
  Sphere = 0,
  Schwefel12,
  Schwefel221,
  Griewank,
  Elliptic,
  Zakharov,
  CosineMixture,
  LevyMontalvo2,
  Neumaier3,
  Periodic,
  Michalewicz,
  Alpine,
};

inline constexpr int kFunctionCount = 12;

/// A benchmark instance: function identity plus the dimension it was
/// instantiated at. The search box is the same interval in every dimension.
struct BenchmarkFn {
  FunctionId id;
  int dim;
  double lower;
  double upper;
  /// Best known objective value at this dimension, when one is known.
  std::optional<double> reference_optimum;
};

/// Instantiate `id` at dimension `dim` (dim must be >= 1; most callers want
/// >= 2). Throws std::invalid_argument on a bad dimension.
BenchmarkFn make_function(FunctionId id, int dim);

/// All twelve functions instantiated at `dim`, in FunctionId order.
std::vector<BenchmarkFn> list_functions(int dim);

/// Stable lowercase name ("sphere", "schwefel12", ...). Backed by string
/// literals, so the data pointer stays valid for the program lifetime.
std::string_view function_name(FunctionId id);

/// Inverse of function_name. Returns nullopt for unknown names.
std::optional<FunctionId> function_from_name(std::string_view name);

/// Comma-separated list of every valid name, for diagnostics.
std::string valid_function_names();

/// Evaluate the objective. Throws std::invalid_argument if x.size() does not
/// match fn.dim or any component is non-finite. Points outside the search box
/// are evaluated as-is; constraint handling is the caller's job.
double evaluate(const BenchmarkFn& fn, std::span<const double> x);

/// The search box of `fn` expanded to per-gene vectors.
Bounds bounds(const BenchmarkFn& fn);

/// A known global minimizer at this dimension, when one is known in closed
/// form. Used by tests to cross-check reference_optimum.
std::optional<Vec> known_optimizer(FunctionId id, int dim);

}  // namespace graphea

#endif
