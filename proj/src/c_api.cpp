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

#include "graphea/graphea.h"

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "graphea/benchmarks.hpp"
#include "graphea/harness.hpp"

namespace {

thread_local std::string t_last_error;

int fail(gea_status code, std::string msg) {
  t_last_error = std::move(msg);
  return code;
}

// Runs `body`, translating C++ exceptions into status codes.
template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(GEA_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(GEA_ERROR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(GEA_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(GEA_ERROR_INTERNAL, "unknown error");
  }
}

int require(bool ok, const char* what) {
  return ok ? GEA_OK : fail(GEA_ERROR_INVALID_ARGUMENT, what);
}

void copy_string(char* dst, std::size_t cap, std::string_view src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

}  // namespace

struct gea_experiment {
  graphea::ExperimentSpec spec;
  std::vector<graphea::CompletedRun> runs;
  bool executed = false;
};

extern "C" {

const char* gea_version(void) { return "0.1.0"; }

const char* gea_last_error(void) { return t_last_error.c_str(); }

int gea_benchmark_count(void) { return graphea::kFunctionCount; }

const char* gea_benchmark_name(int index) {
  if (index < 0 || index >= graphea::kFunctionCount) {
    fail(GEA_ERROR_INVALID_ARGUMENT, "benchmark index out of range");
    return nullptr;
  }
  // function_name returns literal-backed storage.
  return graphea::function_name(static_cast<graphea::FunctionId>(index)).data();
}

int gea_benchmark_evaluate(const char* name, const double* x, int dim,
                           double* out) {
  if (int rc = require(name && x && out, "name, x and out must not be NULL"))
    return rc;
  return guarded([&] {
    const auto id = graphea::function_from_name(name);
    if (!id)
      return fail(GEA_ERROR_INVALID_ARGUMENT,
                  "unknown function '" + std::string(name) +
                      "' (valid: " + graphea::valid_function_names() + ")");
    const graphea::BenchmarkFn fn = graphea::make_function(*id, dim);
    *out = graphea::evaluate(fn, {x, static_cast<std::size_t>(dim)});
    return static_cast<int>(GEA_OK);
  });
}

int gea_benchmark_bounds(const char* name, int dim, double* lower,
                         double* upper) {
  if (int rc = require(name && lower && upper,
                       "name, lower and upper must not be NULL"))
    return rc;
  return guarded([&] {
    const auto id = graphea::function_from_name(name);
    if (!id)
      return fail(GEA_ERROR_INVALID_ARGUMENT,
                  "unknown function '" + std::string(name) +
                      "' (valid: " + graphea::valid_function_names() + ")");
    const graphea::Bounds b =
        graphea::bounds(graphea::make_function(*id, dim));
    for (int i = 0; i < dim; ++i) {
      lower[i] = b.lower[static_cast<std::size_t>(i)];
      upper[i] = b.upper[static_cast<std::size_t>(i)];
    }
    return static_cast<int>(GEA_OK);
  });
}

int gea_benchmark_reference_optimum(const char* name, int dim, double* out) {
  if (int rc = require(name && out, "name and out must not be NULL")) return rc;
  return guarded([&] {
    const auto id = graphea::function_from_name(name);
    if (!id)
      return fail(GEA_ERROR_INVALID_ARGUMENT,
                  "unknown function '" + std::string(name) +
                      "' (valid: " + graphea::valid_function_names() + ")");
    const graphea::BenchmarkFn fn = graphea::make_function(*id, dim);
    if (!fn.reference_optimum)
      return fail(GEA_ERROR_UNKNOWN_VALUE,
                  "no reference optimum known for '" + std::string(name) + "'");
    *out = *fn.reference_optimum;
    return static_cast<int>(GEA_OK);
  });
}

int gea_strategy_count(void) { return graphea::kNumStrategies; }

const char* gea_strategy_name(int id) {
  if (id < 0 || id >= graphea::kNumStrategies) {
    fail(GEA_ERROR_INVALID_ARGUMENT, "strategy id out of range");
    return nullptr;
  }
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    v.reserve(graphea::kNumStrategies);
    for (int i = 0; i < graphea::kNumStrategies; ++i)
      v.push_back(graphea::strategy_name(i));
    return v;
  }();
  return names[static_cast<std::size_t>(id)].c_str();
}

gea_experiment* gea_experiment_new(void) {
  try {
    return new gea_experiment();
  } catch (...) {
    fail(GEA_ERROR_INTERNAL, "allocation failed");
    return nullptr;
  }
}

void gea_experiment_free(gea_experiment* exp) { delete exp; }

int gea_experiment_set(gea_experiment* exp, const char* key, const char* value) {
  if (int rc = require(exp && key && value,
                       "experiment, key and value must not be NULL"))
    return rc;
  return guarded([&] {
    graphea::apply_key_value(exp->spec, key, value);
    return static_cast<int>(GEA_OK);
  });
}

int gea_experiment_load_config(gea_experiment* exp, const char* path) {
  if (int rc = require(exp && path, "experiment and path must not be NULL"))
    return rc;
  return guarded([&] {
    exp->spec = graphea::parse_config_file(path);
    return static_cast<int>(GEA_OK);
  });
}

int gea_experiment_run(gea_experiment* exp) {
  if (int rc = require(exp != nullptr, "experiment must not be NULL")) return rc;
  return guarded([&] {
    exp->runs = graphea::run_experiment(exp->spec);
    exp->executed = true;
    return static_cast<int>(GEA_OK);
  });
}

int gea_experiment_run_count(const gea_experiment* exp) {
  if (!exp) return -fail(GEA_ERROR_INVALID_ARGUMENT, "experiment must not be NULL");
  return static_cast<int>(exp->runs.size());
}

int gea_experiment_summary(const gea_experiment* exp, int index,
                           gea_run_summary* out) {
  if (int rc = require(exp && out, "experiment and out must not be NULL"))
    return rc;
  if (index < 0 || index >= static_cast<int>(exp->runs.size()))
    return fail(GEA_ERROR_INVALID_ARGUMENT, "run index out of range");
  const graphea::CompletedRun& r = exp->runs[static_cast<std::size_t>(index)];
  out->run_id = r.run_id;
  copy_string(out->function, sizeof(out->function),
              graphea::function_name(r.function));
  copy_string(out->mode, sizeof(out->mode), graphea::mode_string(r.mode));
  out->seed = r.seed;
  out->best_fitness = r.record.best_fitness;
  out->evals_used = r.record.evals_used;
  out->generations = r.record.generations_run;
  out->wall_time_ms = r.record.wall_time_ms;
  out->failed = r.failed ? 1 : 0;
  return GEA_OK;
}

int gea_experiment_dimension(const gea_experiment* exp) {
  if (!exp) return -fail(GEA_ERROR_INVALID_ARGUMENT, "experiment must not be NULL");
  return exp->spec.base.dim;
}

int gea_experiment_best_genes(const gea_experiment* exp, int index, double* out,
                              int capacity) {
  if (int rc = require(exp && out, "experiment and out must not be NULL"))
    return rc;
  if (index < 0 || index >= static_cast<int>(exp->runs.size()))
    return fail(GEA_ERROR_INVALID_ARGUMENT, "run index out of range");
  const graphea::CompletedRun& r = exp->runs[static_cast<std::size_t>(index)];
  if (r.failed)
    return fail(GEA_ERROR_INVALID_ARGUMENT, "run failed; no best genes recorded");
  const graphea::Vec& genes = r.record.best_genes;
  if (capacity < static_cast<int>(genes.size()))
    return fail(GEA_ERROR_INVALID_ARGUMENT,
                "capacity too small; need " + std::to_string(genes.size()));
  for (std::size_t i = 0; i < genes.size(); ++i) out[i] = genes[i];
  return GEA_OK;
}

int gea_experiment_write_outputs(const gea_experiment* exp, const char* out_dir) {
  if (int rc = require(exp != nullptr, "experiment must not be NULL")) return rc;
  if (!exp->executed)
    return fail(GEA_ERROR_INVALID_ARGUMENT,
                "experiment has not been run; call gea_experiment_run first");
  return guarded([&] {
    graphea::write_outputs(exp->spec, exp->runs,
                           out_dir ? out_dir : exp->spec.out_dir);
    return static_cast<int>(GEA_OK);
  });
}

int gea_experiment_out_dir(const gea_experiment* exp, char* buf, int capacity) {
  if (int rc = require(exp && buf, "experiment and buf must not be NULL"))
    return rc;
  if (capacity <= static_cast<int>(exp->spec.out_dir.size()))
    return fail(GEA_ERROR_INVALID_ARGUMENT,
                "capacity too small; need " +
                    std::to_string(exp->spec.out_dir.size() + 1));
  copy_string(buf, static_cast<std::size_t>(capacity), exp->spec.out_dir);
  return GEA_OK;
}

int gea_aggregate_csv(const char* runs_csv, const char* out_csv) {
  if (int rc = require(runs_csv && out_csv, "paths must not be NULL")) return rc;
  return guarded([&] {
    const std::vector<graphea::RunRow> rows = graphea::read_runs_csv(runs_csv);
    graphea::write_aggregate_csv(graphea::aggregate_rows(rows), out_csv);
    return static_cast<int>(GEA_OK);
  });
}

int gea_compare_time(const char* config_path, const char* out_dir) {
  if (int rc = require(config_path != nullptr, "config path must not be NULL"))
    return rc;
  return guarded([&] {
    graphea::ExperimentSpec spec = graphea::parse_config_file(config_path);
    if (out_dir) spec.out_dir = out_dir;
    const graphea::TimingComparison cmp = graphea::compare_time(spec);
    graphea::write_outputs(spec, cmp.records, spec.out_dir);
    graphea::write_timing_csv(
        cmp, (std::filesystem::path(spec.out_dir) / "timing.csv").string());
    return static_cast<int>(GEA_OK);
  });
}

}  // extern "C"
