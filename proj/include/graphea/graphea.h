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

/*
  C interface of the graphea shared library.

  Conventions:
   - Functions returning int return a gea_status code; GEA_OK is 0.
   - On failure, gea_last_error() returns a message for the calling thread.
   - Objects are opaque handles created/destroyed by _new/_free pairs.
   - Pointers returned as const char* stay valid for the program lifetime
     unless documented otherwise.
*/

#ifndef GRAPHEA_GRAPHEA_H
#define GRAPHEA_GRAPHEA_H

#ifndef GEA_API
#if defined(_WIN32)
#define GEA_API
#else
#define GEA_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gea_status {
  GEA_OK = 0,
  GEA_ERROR_INVALID_ARGUMENT = 1,
  GEA_ERROR_IO = 2,
  GEA_ERROR_UNKNOWN_VALUE = 3,
  GEA_ERROR_INTERNAL = 4
} gea_status;

GEA_API const char* gea_version(void);

/* Message describing the last failure on the calling thread. Never NULL;
   empty before any failure. Valid until the next failing call on the same
   thread. */
GEA_API const char* gea_last_error(void);

/* ---- benchmark functions ---- */

GEA_API int gea_benchmark_count(void);

/* Name of the benchmark at `index` in [0, gea_benchmark_count()), or NULL
   (with last_error set) when out of range. */
GEA_API const char* gea_benchmark_name(int index);

GEA_API int gea_benchmark_evaluate(const char* name, const double* x, int dim,
                                   double* out);

/* Fills lower[0..dim) and upper[0..dim) with the search box. */
GEA_API int gea_benchmark_bounds(const char* name, int dim, double* lower,
                                 double* upper);

/* Best known objective value at this dimension. Returns
   GEA_ERROR_UNKNOWN_VALUE when no reference optimum is known. */
GEA_API int gea_benchmark_reference_optimum(const char* name, int dim,
                                            double* out);

/* ---- strategies ---- */

GEA_API int gea_strategy_count(void);

/* "blx+levy" etc., or NULL for out-of-range ids. */
GEA_API const char* gea_strategy_name(int id);

/* ---- experiments ---- */

typedef struct gea_experiment gea_experiment;

typedef struct gea_run_summary {
  long long run_id;
  char function[32];
  char mode[32];
  unsigned long long seed;
  double best_fitness;
  long long evals_used;
  long long generations;
  double wall_time_ms;
  int failed;
} gea_run_summary;

/* Fresh experiment with default settings. Free with gea_experiment_free. */
GEA_API gea_experiment* gea_experiment_new(void);
GEA_API void gea_experiment_free(gea_experiment* exp);

/* Set one configuration key ("dim", "budget", "function", "mode", ...);
   same keys and validation as config files. */
GEA_API int gea_experiment_set(gea_experiment* exp, const char* key,
                               const char* value);

/* Load a "key = value" config file on top of the current settings. */
GEA_API int gea_experiment_load_config(gea_experiment* exp, const char* path);

/* Execute the configured batch. Blocks until every run finished. */
GEA_API int gea_experiment_run(gea_experiment* exp);

/* Number of completed runs; 0 before gea_experiment_run. Negative on a NULL
   handle. */
GEA_API int gea_experiment_run_count(const gea_experiment* exp);

GEA_API int gea_experiment_summary(const gea_experiment* exp, int index,
                                   gea_run_summary* out);

/* Configured problem dimension (gene count of best_genes). */
GEA_API int gea_experiment_dimension(const gea_experiment* exp);

/* Copies the best genes of run `index` into out[0..capacity); capacity must
   be at least the problem dimension. */
GEA_API int gea_experiment_best_genes(const gea_experiment* exp, int index,
                                      double* out, int capacity);

/* Write runs.csv/aggregate.csv (+ trace.csv, graph.csv, failures.csv when
   enabled/applicable). out_dir == NULL uses the configured "out" setting. */
GEA_API int gea_experiment_write_outputs(const gea_experiment* exp,
                                         const char* out_dir);

/* Copies the configured output directory (NUL-terminated) into buf. */
GEA_API int gea_experiment_out_dir(const gea_experiment* exp, char* buf,
                                   int capacity);

/* ---- file-level operations ---- */

/* Recompute per-(function, mode) statistics from an existing runs.csv. */
GEA_API int gea_aggregate_csv(const char* runs_csv, const char* out_csv);

/* Run the wall-time comparison described by a config file: every configured
   function under adaptive mode and one static baseline, identical budgets.
   Writes runs.csv/aggregate.csv plus timing.csv into the output directory
   (out_dir == NULL uses the config's "out"). */
GEA_API int gea_compare_time(const char* config_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif
