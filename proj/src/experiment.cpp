#include "kgng/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "kgng/io.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace kgng {

int worker_thread_count() {
#if defined(_OPENMP)
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("KGNG_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

namespace {

struct Accumulator {
  double sum = 0.0, sum_sq = 0.0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
  }
  double mean(int n) const { return sum / n; }
  double stddev(int n) const {
    if (n < 2) return 0.0;
    const double m = mean(n);
    return std::sqrt(std::max(0.0, (sum_sq - n * m * m) / (n - 1)));
  }
};

}  // namespace

ExperimentResult run_experiment(const Dataset& data, const KernelSpec& spec,
                                const HyperParams& hp, int runs,
                                std::uint64_t base_seed,
                                const std::vector<std::int64_t>& trace_schedule,
                                bool keep_outputs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  spec.validate();
  hp.validate();

  std::vector<std::optional<TrainResult>> outputs(
      static_cast<std::size_t>(runs));
  std::vector<RunReport> reports(static_cast<std::size_t>(runs));
  std::exception_ptr failure;
  std::uint64_t failing_seed = 0;

#pragma omp parallel for schedule(dynamic) num_threads(worker_thread_count())
  for (int i = 0; i < runs; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    try {
      TrainResult tr = train(data, spec, hp, seed, trace_schedule);
      reports[static_cast<std::size_t>(i)] = {
          seed, compute_metrics(tr.network, data, spec)};
      if (keep_outputs) {
        outputs[static_cast<std::size_t>(i)] = std::move(tr);
      }
    } catch (...) {
#pragma omp critical(kgng_experiment_failure)
      if (!failure) {
        failure = std::current_exception();
        failing_seed = seed;
      }
    }
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      throw std::runtime_error("run with seed " + std::to_string(failing_seed) +
                               " failed: " + e.what());
    }
  }

  ExperimentResult result;
  result.runs = std::move(reports);
  Accumulator mse_acc, kmse_acc, deg_acc, clust_acc;
  for (const RunReport& r : result.runs) {
    mse_acc.add(r.report.mse);
    kmse_acc.add(r.report.kmse);
    deg_acc.add(r.report.avg_degree);
    clust_acc.add(r.report.avg_clustering);
  }
  result.mean = {mse_acc.mean(runs), kmse_acc.mean(runs), deg_acc.mean(runs),
                 clust_acc.mean(runs)};
  result.stddev = {mse_acc.stddev(runs), kmse_acc.stddev(runs),
                   deg_acc.stddev(runs), clust_acc.stddev(runs)};
  if (keep_outputs) {
    result.outputs.reserve(outputs.size());
    for (auto& o : outputs) result.outputs.push_back(std::move(*o));
  }
  return result;
}

std::vector<SweepRow> sweep_gamma(const Dataset& data, KernelKind kind,
                                  std::span<const double> gammas,
                                  const HyperParams& hp, int runs,
                                  std::uint64_t base_seed) {
  if (gammas.empty()) throw std::invalid_argument("gamma grid is empty");
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    if (!(gammas[i] > gammas[i - 1])) {
      throw std::invalid_argument("gamma grid must be strictly increasing");
    }
  }
  std::vector<SweepRow> rows;
  rows.reserve(gammas.size());
  for (double gamma : gammas) {
    const KernelSpec spec = KernelSpec::make(kind, gamma);
    const ExperimentResult r =
        run_experiment(data, spec, hp, runs, base_seed);
    rows.push_back({gamma, r.mean.mse, r.stddev.mse, r.mean.avg_degree,
                    r.stddev.avg_degree, r.mean.avg_clustering,
                    r.stddev.avg_clustering, runs});
  }
  return rows;
}

std::vector<double> default_gamma_grid(KernelKind kind) {
  std::vector<double> grid;
  if (kind == KernelKind::Log) {
    for (int g = 1; g <= 10; ++g) grid.push_back(g);
  } else {
    for (int i = 2; i <= 20; ++i) grid.push_back(0.25 * i);
  }
  return grid;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "gamma,mse_mean,mse_std,deg_mean,deg_std,clust_mean,clust_std,runs\n";
  for (const SweepRow& r : rows) {
    const double cols[] = {r.gamma,    r.mse_mean,   r.mse_std,  r.deg_mean,
                           r.deg_std,  r.clust_mean, r.clust_std};
    for (double v : cols) out << format_double(v) << ',';
    out << r.runs << '\n';
  }
  return out.str();
}

TableResult run_table(const TableOptions& options) {
  if (options.datasets.empty()) {
    throw std::invalid_argument("table needs at least one dataset");
  }
  if (options.kernels.empty()) {
    throw std::invalid_argument("table needs at least one kernel");
  }

  TableResult table;
  table.kernels = options.kernels;
  HyperParams hp = options.hp;
  hp.iterations = options.iterations;

  for (const std::string& source : options.datasets) {
    Dataset data;
    if (auto kind = synthetic_from_name(source)) {
      data = generate(*kind, options.generated_n, options.data_seed);
    } else {
      data = load_csv(source);
    }
    if (options.normalize_data) data = normalize(data).first;

    table.dataset_names.push_back(source);
    table.dimensions.push_back(data.cols);
    std::vector<double> degree_row, clustering_row;
    for (KernelKind kind : options.kernels) {
      const KernelSpec spec =
          kind == KernelKind::Plain
              ? KernelSpec::plain()
              : KernelSpec::make(kind, kind == KernelKind::Log
                                           ? options.log_gamma
                                           : options.gamma);
      const ExperimentResult r =
          run_experiment(data, spec, hp, options.runs, options.base_seed);
      degree_row.push_back(r.mean.avg_degree);
      clustering_row.push_back(r.mean.avg_clustering);
    }
    table.avg_degree.push_back(std::move(degree_row));
    table.avg_clustering.push_back(std::move(clustering_row));
  }
  return table;
}

std::string table_to_csv(const TableResult& table,
                         const std::vector<std::vector<double>>& cells) {
  std::ostringstream out;
  out << "dataset,dim";
  for (KernelKind kind : table.kernels) out << ',' << kernel_name(kind);
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < table.dataset_names.size(); ++i) {
    out << table.dataset_names[i] << ',' << table.dimensions[i];
    for (double v : cells[i]) {
      std::snprintf(buf, sizeof(buf), "%.6g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kgng
