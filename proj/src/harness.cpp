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

#include "graphea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace graphea {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            std::string_view why) {
  throw std::invalid_argument("config: invalid value '" + std::string(value) +
                              "' for '" + std::string(key) + "': " +
                              std::string(why));
}

long long parse_ll(std::string_view key, std::string_view value) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(value.begin(), value.end(), out);
  if (ec != std::errc{} || p != value.end()) bad_value(key, value, "expected an integer");
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  const long long v = parse_ll(key, value);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    bad_value(key, value, "out of range");
  return static_cast<int>(v);
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [p, ec] = std::from_chars(value.begin(), value.end(), out);
  if (ec != std::errc{} || p != value.end())
    bad_value(key, value, "expected a non-negative integer");
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(value.begin(), value.end(), out);
  if (ec != std::errc{} || p != value.end() || !std::isfinite(out))
    bad_value(key, value, "expected a finite number");
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, "expected true/false");
}

std::vector<FunctionId> parse_function_list(std::string_view key,
                                            std::string_view value) {
  if (value == "all") {
    std::vector<FunctionId> out;
    for (const BenchmarkFn& fn : list_functions(2)) out.push_back(fn.id);
    return out;
  }
  std::vector<FunctionId> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string_view item =
        trim(value.substr(start, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - start));
    if (item.empty()) bad_value(key, value, "empty function name");
    const auto id = function_from_name(item);
    if (!id)
      bad_value(key, value,
                "unknown function '" + std::string(item) +
                    "' (valid: " + valid_function_names() + ")");
    out.push_back(*id);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

constexpr std::string_view kRunsHeader =
    "run_id,function,mode,seed,best_fitness,evals_used,generations,wall_time_ms";
constexpr std::string_view kAggregateHeader =
    "function,mode,runs,mean_best,std_best,mean_evals,mean_wall_time_ms,"
    "std_degenerate";
constexpr std::string_view kTraceHeader =
    "run_id,generation,best_fitness,diversity,strategy_id";
constexpr std::string_view kGraphHeader =
    "run_id,generation,from_strategy,to_strategy,weight";
constexpr std::string_view kFailuresHeader = "run_id,function,mode,seed,error";
constexpr std::string_view kTimingHeader =
    "function,adaptive_mean_wall_time_ms,static_mean_wall_time_ms,ratio";

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool operator==(const RunMode& a, const RunMode& b) {
  return a.adaptive == b.adaptive &&
         (a.adaptive || a.static_strategy == b.static_strategy);
}

std::string mode_string(const RunMode& m) {
  return m.adaptive ? "adaptive" : "static:" + std::to_string(m.static_strategy);
}

std::optional<RunMode> mode_from_string(std::string_view s) {
  if (s == "adaptive") return RunMode{true, 0};
  constexpr std::string_view prefix = "static:";
  if (s.substr(0, prefix.size()) == prefix) {
    const std::string_view id_str = s.substr(prefix.size());
    int id = 0;
    const auto [p, ec] = std::from_chars(id_str.begin(), id_str.end(), id);
    if (ec == std::errc{} && p == id_str.end() && id >= 0 && id < kNumStrategies)
      return RunMode{false, id};
  }
  return std::nullopt;
}

void ExperimentSpec::validate() const {
  if (functions.empty())
    throw std::invalid_argument("experiment: at least one function is required");
  if (modes.empty())
    throw std::invalid_argument("experiment: at least one mode is required");
  if (runs < 1) throw std::invalid_argument("experiment: runs must be at least 1");
  if (parallelism < 1)
    throw std::invalid_argument("experiment: parallel must be at least 1");
  if (out_dir.empty())
    throw std::invalid_argument("experiment: out directory must not be empty");
  EngineConfig probe = base;
  probe.function = functions.front();
  probe.adaptive = modes.front().adaptive;
  probe.static_strategy = modes.front().static_strategy;
  probe.validate();
  for (const RunMode& m : modes)
    if (!m.adaptive && (m.static_strategy < 0 || m.static_strategy >= kNumStrategies))
      throw std::invalid_argument("experiment: static strategy id must lie in [0, 20)");
}

void apply_key_value(ExperimentSpec& spec, std::string_view key,
                     std::string_view value) {
  const std::string_view k = trim(key);
  const std::string_view v = trim(value);
  if (k == "function") {
    spec.functions = parse_function_list(k, v);
  } else if (k == "dim") {
    spec.base.dim = parse_int(k, v);
  } else if (k == "budget") {
    spec.base.budget = parse_ll(k, v);
  } else if (k == "pop") {
    spec.base.pop = parse_int(k, v);
  } else if (k == "delta") {
    spec.base.delta = parse_int(k, v);
  } else if (k == "cr") {
    spec.base.cr = parse_double(k, v);
  } else if (k == "mu") {
    spec.base.mu = parse_double(k, v);
  } else if (k == "mode") {
    const auto m = mode_from_string(v);
    if (!m) bad_value(k, v, "expected 'adaptive' or 'static:<id>' with id in [0, 20)");
    spec.modes = {*m};
  } else if (k == "select") {
    if (v == "map") spec.base.select = SelectMode::Map;
    else if (v == "sample") spec.base.select = SelectMode::Sample;
    else bad_value(k, v, "expected 'map' or 'sample'");
  } else if (k == "epsilon") {
    spec.base.epsilon = parse_double(k, v);
  } else if (k == "eta") {
    spec.base.eta = parse_double(k, v);
  } else if (k == "w_min") {
    spec.base.w_min = parse_double(k, v);
  } else if (k == "alpha") {
    spec.base.operators.blx_alpha = parse_double(k, v);
  } else if (k == "sigma_frac") {
    spec.base.operators.gaussian_sigma_frac = parse_double(k, v);
  } else if (k == "levy_beta") {
    spec.base.operators.levy_beta = parse_double(k, v);
  } else if (k == "levy_scale") {
    spec.base.operators.levy_scale = parse_double(k, v);
  } else if (k == "de_f") {
    spec.base.operators.de_f = parse_double(k, v);
  } else if (k == "de_cr") {
    spec.base.operators.de_cr = parse_double(k, v);
  } else if (k == "runs") {
    spec.runs = parse_int(k, v);
  } else if (k == "seed") {
    spec.base_seed = parse_u64(k, v);
  } else if (k == "out") {
    if (v.empty()) bad_value(k, v, "expected a directory path");
    spec.out_dir = std::string(v);
  } else if (k == "trace") {
    spec.trace = parse_bool(k, v);
  } else if (k == "dump_graph") {
    spec.dump_graph = parse_bool(k, v);
  } else if (k == "parallel") {
    spec.parallelism = parse_int(k, v);
  } else {
    throw std::invalid_argument("config: unknown key '" + std::string(k) + "'");
  }
}

ExperimentSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  ExperimentSpec spec;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view s = line;
    if (const std::size_t hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " of '" + path + "' has no '='");
    try {
      apply_key_value(spec, s.substr(0, eq), s.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " of '" + path + "': " + e.what());
    }
  }
  return spec;
}

std::vector<PlannedRun> plan_runs(const ExperimentSpec& spec) {
  std::vector<PlannedRun> plan;
  plan.reserve(spec.functions.size() * spec.modes.size() *
               static_cast<std::size_t>(spec.runs));
  long long id = 0;
  for (const FunctionId fn : spec.functions)
    for (const RunMode& mode : spec.modes)
      for (int r = 0; r < spec.runs; ++r, ++id)
        plan.push_back({id, fn, mode,
                        spec.base_seed + static_cast<std::uint64_t>(id)});
  return plan;
}

CompletedRun execute_run(const ExperimentSpec& spec, const PlannedRun& plan) {
  CompletedRun done;
  done.run_id = plan.run_id;
  done.function = plan.function;
  done.mode = plan.mode;
  done.seed = plan.seed;
  EngineConfig cfg = spec.base;
  cfg.function = plan.function;
  cfg.adaptive = plan.mode.adaptive;
  cfg.static_strategy = plan.mode.static_strategy;
  cfg.seed = plan.seed;
  cfg.record_trace = spec.trace;
  cfg.record_graph = spec.dump_graph && plan.mode.adaptive;
  try {
    done.record = run(cfg);
  } catch (const std::exception& e) {
    done.failed = true;
    done.error = e.what();
  }
  return done;
}

std::vector<CompletedRun> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const std::vector<PlannedRun> plan = plan_runs(spec);
  std::vector<CompletedRun> out(plan.size());
  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(spec.parallelism), plan.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < plan.size(); ++i) out[i] = execute_run(spec, plan[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= plan.size()) return;
      out[i] = execute_run(spec, plan[i]);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return out;
}

std::vector<RunRow> rows_from_records(std::span<const CompletedRun> records) {
  std::vector<RunRow> rows;
  rows.reserve(records.size());
  for (const CompletedRun& r : records) {
    if (r.failed) continue;
    rows.push_back({r.run_id, std::string(function_name(r.function)),
                    mode_string(r.mode), r.seed, r.record.best_fitness,
                    r.record.evals_used, r.record.generations_run,
                    r.record.wall_time_ms});
  }
  std::sort(rows.begin(), rows.end(), [](const RunRow& a, const RunRow& b) {
    return std::tie(a.function, a.mode, a.run_id) <
           std::tie(b.function, b.mode, b.run_id);
  });
  return rows;
}

std::vector<AggregateStats> aggregate_rows(std::span<const RunRow> rows) {
  if (rows.empty())
    throw std::invalid_argument("aggregate: no successful runs to aggregate");
  std::map<std::pair<std::string, std::string>, std::vector<const RunRow*>> groups;
  for (const RunRow& row : rows) groups[{row.function, row.mode}].push_back(&row);
  std::vector<AggregateStats> out;
  out.reserve(groups.size());
  for (const auto& [key, members] : groups) {
    AggregateStats st;
    st.function = key.first;
    st.mode = key.second;
    st.runs = static_cast<int>(members.size());
    for (const RunRow* row : members) {
      st.mean_best += row->best_fitness;
      st.mean_evals += static_cast<double>(row->evals_used);
      st.mean_wall_time_ms += row->wall_time_ms;
    }
    const double n = static_cast<double>(st.runs);
    st.mean_best /= n;
    st.mean_evals /= n;
    st.mean_wall_time_ms /= n;
    if (st.runs < 2) {
      st.std_best = 0.0;
      st.degenerate_std = true;
    } else {
      double ss = 0.0;
      for (const RunRow* row : members) {
        const double d = row->best_fitness - st.mean_best;
        ss += d * d;
      }
      st.std_best = std::sqrt(ss / (n - 1.0));
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<AggregateStats> aggregate(std::span<const CompletedRun> records) {
  return aggregate_rows(rows_from_records(records));
}

std::vector<RunRow> read_runs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRunsHeader)
    throw std::runtime_error("'" + path + "' is not a runs.csv (bad header)");
  std::vector<RunRow> rows;
  for (int line_no = 2; std::getline(in, line); ++line_no) {
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8)
      throw std::runtime_error("'" + path + "' line " + std::to_string(line_no) +
                               ": expected 8 fields");
    RunRow row;
    row.run_id = parse_ll("run_id", fields[0]);
    row.function = fields[1];
    row.mode = fields[2];
    row.seed = parse_u64("seed", fields[3]);
    row.best_fitness = parse_double("best_fitness", fields[4]);
    row.evals_used = parse_ll("evals_used", fields[5]);
    row.generations = parse_ll("generations", fields[6]);
    row.wall_time_ms = parse_double("wall_time_ms", fields[7]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_aggregate_csv(std::span<const AggregateStats> stats,
                         const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << kAggregateHeader << '\n';
  for (const AggregateStats& st : stats) {
    out << st.function << ',' << st.mode << ',' << st.runs << ','
        << format_double(st.mean_best) << ',' << format_double(st.std_best)
        << ',' << format_double(st.mean_evals) << ','
        << format_double(st.mean_wall_time_ms) << ','
        << (st.degenerate_std ? 1 : 0) << '\n';
  }
  finish_write(out, path);
}

OutputPaths write_outputs(const ExperimentSpec& spec,
                          std::span<const CompletedRun> records,
                          const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  OutputPaths paths;

  std::vector<const CompletedRun*> ordered;
  ordered.reserve(records.size());
  for (const CompletedRun& r : records) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const CompletedRun* a, const CompletedRun* b) {
              const auto ka = std::make_tuple(function_name(a->function),
                                              mode_string(a->mode), a->run_id);
              const auto kb = std::make_tuple(function_name(b->function),
                                              mode_string(b->mode), b->run_id);
              return ka < kb;
            });

  paths.runs_csv = (fs::path(out_dir) / "runs.csv").string();
  {
    std::ofstream out = open_for_write(paths.runs_csv);
    out << kRunsHeader << '\n';
    for (const RunRow& row : rows_from_records(records)) {
      out << row.run_id << ',' << row.function << ',' << row.mode << ','
          << row.seed << ',' << format_double(row.best_fitness) << ','
          << row.evals_used << ',' << row.generations << ','
          << format_double(row.wall_time_ms) << '\n';
    }
    finish_write(out, paths.runs_csv);
  }

  paths.aggregate_csv = (fs::path(out_dir) / "aggregate.csv").string();
  write_aggregate_csv(aggregate(records), paths.aggregate_csv);

  if (spec.trace) {
    paths.trace_csv = (fs::path(out_dir) / "trace.csv").string();
    std::ofstream out = open_for_write(paths.trace_csv);
    out << kTraceHeader << '\n';
    for (const CompletedRun* r : ordered) {
      if (r->failed) continue;
      for (const TraceRow& row : r->record.trace)
        out << r->run_id << ',' << row.generation << ','
            << format_double(row.best_fitness) << ','
            << format_double(row.diversity) << ',' << row.strategy_id << '\n';
    }
    finish_write(out, paths.trace_csv);
  }

  if (spec.dump_graph) {
    paths.graph_csv = (fs::path(out_dir) / "graph.csv").string();
    std::ofstream out = open_for_write(paths.graph_csv);
    out << kGraphHeader << '\n';
    for (const CompletedRun* r : ordered) {
      if (r->failed) continue;
      for (const GraphSnapshot& snap : r->record.graph_snapshots)
        for (int from = 0; from < snap.n; ++from)
          for (int to = 0; to < snap.n; ++to)
            out << r->run_id << ',' << snap.generation << ',' << from << ','
                << to << ','
                << format_double(
                       snap.weights[static_cast<std::size_t>(from) * snap.n + to])
                << '\n';
    }
    finish_write(out, paths.graph_csv);
  }

  const bool any_failed =
      std::any_of(records.begin(), records.end(),
                  [](const CompletedRun& r) { return r.failed; });
  if (any_failed) {
    paths.failures_csv = (fs::path(out_dir) / "failures.csv").string();
    std::ofstream out = open_for_write(paths.failures_csv);
    out << kFailuresHeader << '\n';
    for (const CompletedRun* r : ordered) {
      if (!r->failed) continue;
      out << r->run_id << ',' << function_name(r->function) << ','
          << mode_string(r->mode) << ',' << r->seed << ','
          << csv_escape(r->error) << '\n';
    }
    finish_write(out, paths.failures_csv);
  }
  return paths;
}

TimingComparison compare_time(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  RunMode baseline{false, 0};
  for (const RunMode& m : spec_in.modes)
    if (!m.adaptive) {
      baseline = m;
      break;
    }
  spec.modes = {RunMode{true, 0}, baseline};
  spec.validate();

  TimingComparison cmp;
  cmp.baseline = baseline;
  cmp.records = run_experiment(spec);

  for (const FunctionId fn : spec.functions) {
    double sums[2] = {0.0, 0.0};
    long long counts[2] = {0, 0};
    for (const CompletedRun& r : cmp.records) {
      if (r.failed || r.function != fn) continue;
      const int slot = r.mode.adaptive ? 0 : 1;
      sums[slot] += r.record.wall_time_ms;
      ++counts[slot];
    }
    if (counts[0] == 0 || counts[1] == 0)
      throw std::runtime_error("compare_time: function '" +
                               std::string(function_name(fn)) +
                               "' is missing successful runs in one mode");
    TimingRow row;
    row.function = function_name(fn);
    row.adaptive_mean_wall_time_ms = sums[0] / static_cast<double>(counts[0]);
    row.static_mean_wall_time_ms = sums[1] / static_cast<double>(counts[1]);
    row.ratio = row.adaptive_mean_wall_time_ms / row.static_mean_wall_time_ms;
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

void write_timing_csv(const TimingComparison& cmp, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << kTimingHeader << '\n';
  for (const TimingRow& row : cmp.rows)
    out << row.function << ',' << format_double(row.adaptive_mean_wall_time_ms)
        << ',' << format_double(row.static_mean_wall_time_ms) << ','
        << format_double(row.ratio) << '\n';
  finish_write(out, path);
}

}  // namespace graphea
