#ifndef KGNG_EXPERIMENT_HPP
#define KGNG_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgng/dataset.hpp"
#include "kgng/kernels.hpp"
#include "kgng/metrics.hpp"
#include "kgng/trainer.hpp"

namespace kgng {

struct RunReport {
  std::uint64_t seed = 0;
  MetricsReport report;
};

struct ExperimentResult {
  MetricsReport mean;
  MetricsReport stddev;  // sample standard deviation; zero for a single run
  std::vector<RunReport> runs;        // ascending seed
  std::vector<TrainResult> outputs;   // filled when keep_outputs is set
};

// Number of worker threads for the run fan-out: OpenMP's maximum, capped
// by the KGNG_THREADS environment variable when set.
int worker_thread_count();

// `runs` independent trainings with seeds base_seed, base_seed+1, ...
// fanned out across workers. Per-run seeding is the only randomness
// source and aggregation is ordered by seed, so parallel and sequential
// execution give identical results. A failing run aborts the experiment
// with its seed named.
ExperimentResult run_experiment(const Dataset& data, const KernelSpec& spec,
                                const HyperParams& hp, int runs,
                                std::uint64_t base_seed,
                                const std::vector<std::int64_t>& trace_schedule = {},
                                bool keep_outputs = false);

struct SweepRow {
  double gamma = 0.0;
  double mse_mean = 0.0, mse_std = 0.0;
  double deg_mean = 0.0, deg_std = 0.0;
  double clust_mean = 0.0, clust_std = 0.0;
  int runs = 0;
};

// One averaged row per gamma; the grid must be strictly increasing.
std::vector<SweepRow> sweep_gamma(const Dataset& data, KernelKind kind,
                                  std::span<const double> gammas,
                                  const HyperParams& hp, int runs,
                                  std::uint64_t base_seed);

// 0.5..5.0 step 0.25, except 1..10 step 1 for the log kernel.
std::vector<double> default_gamma_grid(KernelKind kind);

// gamma,mse_mean,mse_std,deg_mean,deg_std,clust_mean,clust_std,runs
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

struct TableOptions {
  std::vector<std::string> datasets;  // generator names or CSV paths
  std::vector<KernelKind> kernels = all_kernel_kinds();
  int runs = 10;
  std::uint64_t base_seed = 1;
  std::int64_t iterations = 400000;
  double gamma = 1.8;
  double log_gamma = 3.0;
  std::size_t generated_n = 1000;
  std::uint64_t data_seed = 1;
  bool normalize_data = true;
  HyperParams hp;  // iterations above overrides hp.iterations
};

struct TableResult {
  std::vector<std::string> dataset_names;
  std::vector<std::size_t> dimensions;
  std::vector<KernelKind> kernels;
  // [dataset][kernel]
  std::vector<std::vector<double>> avg_degree;
  std::vector<std::vector<double>> avg_clustering;
};

// Mean avg_degree and avg_clustering per (dataset, kernel) over `runs`
// seeded trainings each.
TableResult run_table(const TableOptions& options);

// dataset,dim,<one column per kernel>
std::string table_to_csv(const TableResult& table,
                         const std::vector<std::vector<double>>& cells);

}  // namespace kgng

#endif  // KGNG_EXPERIMENT_HPP
