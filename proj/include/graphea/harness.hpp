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

#ifndef GRAPHEA_HARNESS_HPP
#define GRAPHEA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphea/engine.hpp"

namespace graphea {

/// How a batch of runs drives the engine: fully adaptive, or pinned to one
/// strategy. Serialized as "adaptive" / "static:<id>".
struct RunMode {
  bool adaptive = true;
  int static_strategy = 0;
};

bool operator==(const RunMode& a, const RunMode& b);
std::string mode_string(const RunMode& m);
std::optional<RunMode> mode_from_string(std::string_view s);

/// A batch experiment: every function crossed with every mode, `runs`
/// repetitions each. Run ids enumerate (function, mode, repetition) in that
/// nesting order and each run is seeded with base_seed + run_id, so the whole
/// batch is reproducible and runs never share a seed.
struct ExperimentSpec {
  std::vector<FunctionId> functions = {
      FunctionId::Sphere,       FunctionId::Schwefel12,
      FunctionId::Schwefel221,  FunctionId::Griewank,
      FunctionId::Elliptic,     FunctionId::Zakharov,
      FunctionId::CosineMixture, FunctionId::LevyMontalvo2,
      FunctionId::Neumaier3,    FunctionId::Periodic,
      FunctionId::Michalewicz,  FunctionId::Alpine,
  };
  std::vector<RunMode> modes = {RunMode{}};
  EngineConfig base;  // function/seed/mode fields are overwritten per run
  int runs = 100;
  std::uint64_t base_seed = 1;
  std::string out_dir = "out";
  int parallelism = 1;
  bool trace = false;
  bool dump_graph = false;

  void validate() const;
};

/// Applies one "key = value" setting. Unknown keys and out-of-domain values
/// throw std::invalid_argument naming the key. Recognized keys: function,
/// dim, budget, pop, delta, cr, mu, mode, select, epsilon, eta, w_min, alpha,
/// sigma_frac, levy_beta, levy_scale, de_f, de_cr, runs, seed, out, trace,
/// dump_graph, parallel.
void apply_key_value(ExperimentSpec& spec, std::string_view key,
                     std::string_view value);

/// Line-oriented "key = value" file; '#' starts a comment, blank lines are
/// skipped. An empty file yields the defaults. Parse errors report the line
/// number.
ExperimentSpec parse_config_file(const std::string& path);

struct PlannedRun {
  long long run_id = 0;
  FunctionId function = FunctionId::Sphere;
  RunMode mode;
  std::uint64_t seed = 0;
};

struct CompletedRun {
  long long run_id = 0;
  FunctionId function = FunctionId::Sphere;
  RunMode mode;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  RunRecord record;
};

std::vector<PlannedRun> plan_runs(const ExperimentSpec& spec);

/// One engine run; engine exceptions are captured into `failed`/`error`
/// instead of propagating, so one bad run cannot sink a batch.
CompletedRun execute_run(const ExperimentSpec& spec, const PlannedRun& plan);

/// The whole batch, optionally spread over spec.parallelism worker threads.
/// Results come back in plan order regardless of thread interleaving.
std::vector<CompletedRun> run_experiment(const ExperimentSpec& spec);

/// One parsed row of runs.csv.
struct RunRow {
  long long run_id = 0;
  std::string function;
  std::string mode;
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  long long evals_used = 0;
  long long generations = 0;
  double wall_time_ms = 0.0;
};

struct AggregateStats {
  std::string function;
  std::string mode;
  int runs = 0;
  double mean_best = 0.0;
  double std_best = 0.0;  // sample standard deviation (n - 1)
  double mean_evals = 0.0;
  double mean_wall_time_ms = 0.0;
  bool degenerate_std = false;  // single-run group, std reported as 0
};

std::vector<RunRow> rows_from_records(std::span<const CompletedRun> records);

/// Group rows by (function, mode) and average. Throws on an empty input.
std::vector<AggregateStats> aggregate_rows(std::span<const RunRow> rows);
std::vector<AggregateStats> aggregate(std::span<const CompletedRun> records);

/// runs.csv reader; validates the exact header.
std::vector<RunRow> read_runs_csv(const std::string& path);

struct OutputPaths {
  std::string runs_csv;
  std::string aggregate_csv;
  std::string trace_csv;     // empty when tracing was off
  std::string graph_csv;     // empty when graph dumping was off
  std::string failures_csv;  // empty when every run succeeded
};

/// Writes runs.csv + aggregate.csv (and trace.csv / graph.csv / failures.csv
/// when applicable) into out_dir, creating it if needed. Rows are sorted by
/// (function, mode, run_id); floats are serialized with %.17g so re-reading
/// reproduces the exact doubles.
OutputPaths write_outputs(const ExperimentSpec& spec,
                          std::span<const CompletedRun> records,
                          const std::string& out_dir);

void write_aggregate_csv(std::span<const AggregateStats> stats,
                         const std::string& path);

struct TimingRow {
  std::string function;
  double adaptive_mean_wall_time_ms = 0.0;
  double static_mean_wall_time_ms = 0.0;
  double ratio = 0.0;  // adaptive / static
};

struct TimingComparison {
  std::vector<TimingRow> rows;
  std::vector<CompletedRun> records;
  RunMode baseline;
};

/// Runs every function under adaptive mode and one static baseline with
/// identical budgets, then compares mean wall times per function. The
/// baseline is the first static mode in spec.modes, or static:0 when the
/// spec names none.
TimingComparison compare_time(const ExperimentSpec& spec);

void write_timing_csv(const TimingComparison& cmp, const std::string& path);

/// %.17g, the shortest form that round-trips IEEE doubles.
std::string format_double(double v);

}  // namespace graphea

#endif
