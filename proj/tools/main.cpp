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

// graphea command line. Talks to the library exclusively through the C API;
// option values are passed through as strings so validation and diagnostics
// live in one place (the library).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "graphea/graphea.h"

namespace {

struct ExperimentDeleter {
  void operator()(gea_experiment* exp) const { gea_experiment_free(exp); }
};
using ExperimentHandle = std::unique_ptr<gea_experiment, ExperimentDeleter>;

int report(int status) {
  if (status != GEA_OK) std::cerr << "error: " << gea_last_error() << '\n';
  return status;
}

void print_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return;
  }
  std::cout << in.rdbuf();
}

int cmd_run(const std::string& config,
            const std::vector<std::pair<std::string, std::string>>& settings) {
  ExperimentHandle exp(gea_experiment_new());
  if (!exp) return report(GEA_ERROR_INTERNAL);
  if (!config.empty()) {
    if (int rc = report(gea_experiment_load_config(exp.get(), config.c_str())))
      return rc;
  }
  for (const auto& [key, value] : settings) {
    if (int rc = report(gea_experiment_set(exp.get(), key.c_str(), value.c_str())))
      return rc;
  }
  if (int rc = report(gea_experiment_run(exp.get()))) return rc;
  if (int rc = report(gea_experiment_write_outputs(exp.get(), nullptr))) return rc;

  char out_dir[4096];
  if (int rc = report(gea_experiment_out_dir(exp.get(), out_dir, sizeof(out_dir))))
    return rc;
  const int runs = gea_experiment_run_count(exp.get());
  int failed = 0;
  for (int i = 0; i < runs; ++i) {
    gea_run_summary s;
    if (gea_experiment_summary(exp.get(), i, &s) == GEA_OK && s.failed) ++failed;
  }
  std::cout << runs - failed << " run(s) completed";
  if (failed > 0) std::cout << ", " << failed << " failed (see failures.csv)";
  std::cout << "; outputs in " << out_dir << "\n\n";
  print_file((std::filesystem::path(out_dir) / "aggregate.csv").string());
  return failed == 0 ? 0 : 1;
}

int cmd_compare_time(const std::string& config, const std::string& out_dir) {
  if (int rc = report(gea_compare_time(config.c_str(),
                                       out_dir.empty() ? nullptr : out_dir.c_str())))
    return rc;
  std::string dir = out_dir;
  if (dir.empty()) {
    // The config decided where outputs went; ask the library.
    ExperimentHandle exp(gea_experiment_new());
    if (!exp) return report(GEA_ERROR_INTERNAL);
    if (int rc = report(gea_experiment_load_config(exp.get(), config.c_str())))
      return rc;
    char buf[4096];
    if (int rc = report(gea_experiment_out_dir(exp.get(), buf, sizeof(buf))))
      return rc;
    dir = buf;
  }
  std::cout << "timing comparison written to " << dir << "\n\n";
  print_file((std::filesystem::path(dir) / "timing.csv").string());
  return 0;
}

int cmd_aggregate(const std::string& in_path, std::string out_path) {
  namespace fs = std::filesystem;
  std::string runs_csv = in_path;
  if (fs::is_directory(in_path)) {
    runs_csv = (fs::path(in_path) / "runs.csv").string();
    if (out_path.empty())
      out_path = (fs::path(in_path) / "aggregate.csv").string();
  } else if (out_path.empty()) {
    out_path = (fs::path(in_path).parent_path() / "aggregate.csv").string();
  }
  if (int rc = report(gea_aggregate_csv(runs_csv.c_str(), out_path.c_str())))
    return rc;
  std::cout << "aggregate written to " << out_path << "\n\n";
  print_file(out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-adaptive evolutionary optimization benchmark harness"};
  app.require_subcommand(1);

  // run ----------------------------------------------------------------
  CLI::App* run = app.add_subcommand("run", "execute a batch of optimization runs");
  std::string run_config;
  run->add_option("--config", run_config, "key = value config file");
  // Collected in declaration order; later flags override config values.
  std::vector<std::pair<std::string, std::string>> settings;
  auto passthrough = [&](CLI::App* cmd, const std::string& flag,
                         const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&settings, key](const std::string& v) { settings.emplace_back(key, v); },
        help);
  };
  passthrough(run, "--function", "function",
              "benchmark name, comma list, or 'all'");
  passthrough(run, "--dim", "dim", "problem dimension (default 40)");
  passthrough(run, "--budget", "budget",
              "objective evaluation budget per run (default 40000)");
  passthrough(run, "--pop", "pop", "population size (default 50)");
  passthrough(run, "--delta", "delta",
              "generations per strategy window (default 20)");
  passthrough(run, "--cr", "cr", "crossover probability (default 0.7)");
  passthrough(run, "--mu", "mu", "mutation probability (default 0.3)");
  passthrough(run, "--mode", "mode", "'adaptive' or 'static:<id>'");
  passthrough(run, "--select", "select", "'map' or 'sample' (default map)");
  passthrough(run, "--epsilon", "epsilon",
              "exploration rate for map selection (default 0.05)");
  passthrough(run, "--eta", "eta", "graph learning rate (default 0.1)");
  passthrough(run, "--w-min", "w_min", "arc weight floor (default 0.01)");
  passthrough(run, "--alpha", "alpha", "BLX alpha (default 0.5)");
  passthrough(run, "--sigma-frac", "sigma_frac",
              "gaussian sigma as a range fraction (default 0.1)");
  passthrough(run, "--levy-beta", "levy_beta", "levy stability index (default 1.5)");
  passthrough(run, "--levy-scale", "levy_scale",
              "levy step scale as a range fraction (default 0.01)");
  passthrough(run, "--de-f", "de_f", "DE differential weight (default 0.5)");
  passthrough(run, "--de-cr", "de_cr", "DE crossover rate (default 0.9)");
  passthrough(run, "--runs", "runs", "repetitions per (function, mode) (default 100)");
  passthrough(run, "--seed", "seed", "base seed; run i uses seed + i (default 1)");
  passthrough(run, "--out", "out", "output directory (default 'out')");
  passthrough(run, "--parallel", "parallel", "worker threads (default 1)");
  run->add_flag_callback(
      "--trace", [&settings] { settings.emplace_back("trace", "true"); },
      "write per-generation trace.csv");
  run->add_flag_callback(
      "--dump-graph", [&settings] { settings.emplace_back("dump_graph", "true"); },
      "write strategy-graph snapshots to graph.csv");

  // compare-time ---------------------------------------------------------
  CLI::App* cmp = app.add_subcommand(
      "compare-time", "wall-time comparison of adaptive mode vs a static baseline");
  std::string cmp_config, cmp_out;
  cmp->add_option("--config", cmp_config, "key = value config file")->required();
  cmp->add_option("--out", cmp_out, "output directory (overrides the config)");

  // aggregate ------------------------------------------------------------
  CLI::App* agg = app.add_subcommand(
      "aggregate", "recompute aggregate.csv from an existing runs.csv");
  std::string agg_in, agg_out;
  agg->add_option("--in", agg_in, "runs.csv or a directory containing it")
      ->required();
  agg->add_option("--out", agg_out, "output csv path");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(run_config, settings);
  if (cmp->parsed()) return cmd_compare_time(cmp_config, cmp_out);
  if (agg->parsed()) return cmd_aggregate(agg_in, agg_out);
  return 0;
}
