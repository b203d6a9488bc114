// Command-line front end: dataset generation, training, metrics, gamma
// sweeps, table reproduction, and SVG rendering.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgng/experiment.hpp"
#include "kgng/io.hpp"
#include "kgng/svg.hpp"

namespace {

using namespace kgng;

// Shared --data/--dataset source flags.
struct DataSourceOptions {
  std::string csv_path;
  std::string generator;
  std::size_t n = 1000;
  std::uint64_t data_seed = 1;
  bool has_header = false;
  std::optional<std::size_t> label_column;
  bool raw = false;

  void add_to(CLI::App* cmd, bool required) {
    auto* data = cmd->add_option("--data", csv_path, "CSV file with one point per row");
    auto* gen = cmd->add_option("--dataset", generator,
                                "generator name (square, blobs, circles, "
                                "moons, swiss_roll, s_curve)");
    data->excludes(gen);
    if (required) {
      // One of the two must be present; checked in resolve().
    }
    cmd->add_option("--n", n, "points to generate")->capture_default_str();
    cmd->add_option("--data-seed", data_seed, "generator seed")
        ->capture_default_str();
    cmd->add_flag("--has-header", has_header, "skip the first CSV row");
    auto* label =
        cmd->add_option("--label-col", "zero-based CSV column to drop");
    label->each([this](const std::string& v) {
      label_column = static_cast<std::size_t>(std::stoull(v));
    });
    cmd->add_flag("--raw", raw, "skip z-score normalization");
  }

  bool present() const { return !csv_path.empty() || !generator.empty(); }

  // Label used in network metadata.
  std::string label() const { return csv_path.empty() ? generator : csv_path; }

  Dataset resolve() const {
    if (!present()) {
      throw std::runtime_error("either --data or --dataset is required");
    }
    Dataset data;
    if (!generator.empty()) {
      const auto kind = synthetic_from_name(generator);
      if (!kind) {
        throw std::runtime_error("unknown dataset '" + generator + "'");
      }
      data = generate(*kind, n, data_seed);
    } else {
      data = load_csv(csv_path, {has_header, label_column});
    }
    if (!raw) data = normalize(data).first;
    return data;
  }
};

KernelSpec make_kernel(const std::string& name, double gamma) {
  const auto kind = kernel_from_name(name);
  if (!kind) {
    throw std::runtime_error(
        "unknown kernel '" + name +
        "' (expected plain, gaussian, laplacian, cauchy, imq, or log)");
  }
  if (*kind == KernelKind::Plain) return KernelSpec::plain();
  if (std::isnan(gamma)) {
    // Paper operating points.
    gamma = (*kind == KernelKind::Log) ? 3.0 : 1.8;
  }
  return KernelSpec::make(*kind, gamma);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string cell =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!cell.empty()) cells.push_back(cell);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return cells;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  for (const std::string& cell : split_list(text)) {
    grid.push_back(std::stod(cell));
  }
  return grid;
}

// 1, 2, 5, 10, 20, 50, ... up to and including the final iteration.
std::vector<std::int64_t> decade_schedule(std::int64_t iterations) {
  std::vector<std::int64_t> schedule;
  for (std::int64_t base = 1; base <= iterations; base *= 10) {
    for (std::int64_t step : {1, 2, 5}) {
      const std::int64_t t = base * step;
      if (t <= iterations) schedule.push_back(t);
    }
  }
  if (schedule.empty() || schedule.back() != iterations) {
    schedule.push_back(iterations);
  }
  return schedule;
}

void add_hyperparam_flags(CLI::App* cmd, HyperParams& hp) {
  cmd->add_option("--iters", hp.iterations, "training iterations")
      ->capture_default_str();
  cmd->add_option("--n-max", hp.n_max, "unit-count cap")->capture_default_str();
  cmd->add_option("--a-max", hp.a_max, "maximum edge age")
      ->capture_default_str();
  cmd->add_option("--lambda", hp.lambda, "insertion period")
      ->capture_default_str();
  cmd->add_option("--alpha", hp.alpha, "error split factor")
      ->capture_default_str();
  cmd->add_option("--beta", hp.beta, "error decay")->capture_default_str();
  cmd->add_option("--eps-winner", hp.eps_winner, "winner learning rate")
      ->capture_default_str();
  cmd->add_option("--eps-neighbor", hp.eps_neighbor, "neighbor learning rate")
      ->capture_default_str();
}

// Expands any "--config FILE" pair into the flat key=value flags the
// file holds, in place, so every subcommand accepts a config file that
// mirrors its flags.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg != "--config") {
      args.push_back(arg);
      continue;
    }
    if (i + 1 >= argc) throw std::runtime_error("--config needs a file path");
    const std::string path = argv[++i];
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(f, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (line.empty() || line.front() == '#') continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": expected key=value");
      }
      args.push_back("--" + line.substr(0, eq) + "=" + line.substr(eq + 1));
    }
  }
  return args;
}

int run(int argc, char** argv) {
  CLI::App app{"kernel growing neural gas toolkit"};
  app.require_subcommand(1);
  app.footer("Every subcommand also accepts --config FILE, a flat key=value\n"
             "file whose keys mirror the subcommand's long flags.");

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a synthetic dataset CSV");
  std::string gen_name;
  std::size_t gen_n = 1000;
  std::uint64_t gen_seed = 1;
  double gen_noise = 0.05;
  std::string gen_out;
  gen->add_option("--dataset", gen_name, "generator name")->required();
  gen->add_option("--n", gen_n, "number of points")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--noise", gen_noise, "noise std for circles and moons")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // ---- train --------------------------------------------------------
  auto* train_cmd = app.add_subcommand("train", "train one network");
  DataSourceOptions train_src;
  train_src.add_to(train_cmd, true);
  std::string train_kernel = "plain";
  double train_gamma = std::nan("");
  std::uint64_t train_seed = 1;
  HyperParams train_hp;
  std::string net_out, trace_out, edges_out, trace_points;
  train_cmd->add_option("--kernel", train_kernel, "kernel kind")
      ->capture_default_str();
  train_cmd->add_option("--gamma", train_gamma,
                        "kernel bandwidth (default: 1.8, log kernel 3)");
  train_cmd->add_option("--seed", train_seed, "training seed")
      ->capture_default_str();
  add_hyperparam_flags(train_cmd, train_hp);
  train_cmd->add_option("--net", net_out, "network JSON output path");
  train_cmd->add_option("--trace", trace_out, "trace CSV output path");
  train_cmd->add_option("--edges", edges_out, "edge-list output path");
  train_cmd->add_option("--trace-points", trace_points,
                        "comma-separated iterations to trace "
                        "(default: 1,2,5,10,... decades)");

  // ---- metrics ------------------------------------------------------
  auto* metrics_cmd =
      app.add_subcommand("metrics", "evaluate a stored network");
  DataSourceOptions metrics_src;
  metrics_src.add_to(metrics_cmd, true);
  std::string metrics_net, metrics_kernel;
  double metrics_gamma = std::nan("");
  metrics_cmd->add_option("--net", metrics_net, "network JSON path")
      ->required();
  metrics_cmd->add_option("--kernel", metrics_kernel,
                          "kernel kind (default: the network's metadata)");
  metrics_cmd->add_option("--gamma", metrics_gamma, "kernel bandwidth");

  // ---- sweep --------------------------------------------------------
  auto* sweep_cmd =
      app.add_subcommand("sweep", "average metrics over a gamma grid");
  DataSourceOptions sweep_src;
  sweep_src.add_to(sweep_cmd, true);
  std::string sweep_kernel, sweep_gammas, sweep_out;
  int sweep_runs = 10;
  std::uint64_t sweep_seed = 1;
  HyperParams sweep_hp;
  sweep_hp.iterations = 400000;
  sweep_cmd->add_option("--kernel", sweep_kernel, "kernelized kind to sweep")
      ->required();
  sweep_cmd->add_option("--gammas", sweep_gammas,
                        "comma-separated gamma grid (default: 0.5..5 step "
                        "0.25; log kernel 1..10)");
  sweep_cmd->add_option("--runs", sweep_runs, "runs per gamma")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_seed, "base training seed")
      ->capture_default_str();
  add_hyperparam_flags(sweep_cmd, sweep_hp);
  sweep_cmd->add_option("--out", sweep_out, "sweep CSV output path")
      ->required();

  // ---- table --------------------------------------------------------
  auto* table_cmd = app.add_subcommand(
      "table", "average degree/clustering tables over datasets and kernels");
  std::string table_datasets, table_kernels;
  TableOptions table_opt;
  std::string table_degree_out = "table_degree.csv";
  std::string table_clustering_out = "table_clustering.csv";
  bool table_raw = false;
  table_cmd
      ->add_option("--datasets", table_datasets,
                   "comma-separated generator names and/or CSV paths")
      ->required();
  table_cmd->add_option("--kernels", table_kernels,
                        "comma-separated kernel kinds (default: all six)");
  table_cmd->add_option("--runs", table_opt.runs, "runs per cell")
      ->capture_default_str();
  table_cmd->add_option("--iters", table_opt.iterations, "iterations per run")
      ->capture_default_str();
  table_cmd->add_option("--seed", table_opt.base_seed, "base training seed")
      ->capture_default_str();
  table_cmd->add_option("--gamma", table_opt.gamma, "bandwidth for kernels")
      ->capture_default_str();
  table_cmd
      ->add_option("--log-gamma", table_opt.log_gamma,
                   "bandwidth for the log kernel")
      ->capture_default_str();
  table_cmd->add_option("--n", table_opt.generated_n, "generated dataset size")
      ->capture_default_str();
  table_cmd->add_option("--data-seed", table_opt.data_seed, "generator seed")
      ->capture_default_str();
  table_cmd->add_flag("--raw", table_raw, "skip z-score normalization");
  table_cmd
      ->add_option("--out-degree", table_degree_out, "average degree CSV")
      ->capture_default_str();
  table_cmd
      ->add_option("--out-clustering", table_clustering_out,
                   "average clustering CSV")
      ->capture_default_str();

  // ---- render -------------------------------------------------------
  auto* render_cmd =
      app.add_subcommand("render", "draw a stored network as SVG");
  DataSourceOptions render_src;
  render_src.add_to(render_cmd, false);
  std::string render_net, render_out;
  render_cmd->add_option("--net", render_net, "network JSON path")->required();
  render_cmd->add_option("--out", render_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n"
              << app.help() << std::flush;
    return 2;
  }

  try {
    if (*gen) {
      const auto kind = synthetic_from_name(gen_name);
      if (!kind) throw std::runtime_error("unknown dataset '" + gen_name + "'");
      write_csv(generate(*kind, gen_n, gen_seed, GenerateOptions{gen_noise}),
                gen_out);
    } else if (*train_cmd) {
      const Dataset data = train_src.resolve();
      const KernelSpec spec = make_kernel(train_kernel, train_gamma);
      std::vector<std::int64_t> schedule;
      if (!trace_points.empty()) {
        for (double v : parse_grid(trace_points)) {
          schedule.push_back(static_cast<std::int64_t>(v));
        }
      } else if (!trace_out.empty()) {
        schedule = decade_schedule(train_hp.iterations);
      }
      const TrainResult result =
          train(data, spec, train_hp, train_seed, schedule);

      NetworkMeta meta;
      meta.kernel = std::string(kernel_name(spec.kind));
      meta.gamma = spec.gamma;
      meta.iterations = train_hp.iterations;
      meta.seed = train_seed;
      meta.dataset = train_src.label();
      if (!net_out.empty()) write_network_json(result.network, meta, net_out);
      if (!trace_out.empty()) write_trace_csv(result.trace, trace_out);
      if (!edges_out.empty()) write_edge_list(result.network, edges_out);
      if (net_out.empty() && trace_out.empty() && edges_out.empty()) {
        std::cout << metrics_to_json(
            compute_metrics(result.network, data, spec));
      }
    } else if (*metrics_cmd) {
      const LoadedNetwork loaded = read_network_json(metrics_net);
      const Dataset data = metrics_src.resolve();
      const KernelSpec spec =
          metrics_kernel.empty()
              ? make_kernel(loaded.meta.kernel, loaded.meta.gamma)
              : make_kernel(metrics_kernel, metrics_gamma);
      std::cout << metrics_to_json(
          compute_metrics(loaded.network, data, spec));
    } else if (*sweep_cmd) {
      const auto kind = kernel_from_name(sweep_kernel);
      if (!kind || *kind == KernelKind::Plain) {
        throw std::runtime_error("sweep needs a kernelized kind "
                                 "(gaussian, laplacian, cauchy, imq, log)");
      }
      const Dataset data = sweep_src.resolve();
      const std::vector<double> grid = sweep_gammas.empty()
                                           ? default_gamma_grid(*kind)
                                           : parse_grid(sweep_gammas);
      const auto rows =
          sweep_gamma(data, *kind, grid, sweep_hp, sweep_runs, sweep_seed);
      atomic_write_text(sweep_out, sweep_to_csv(rows));
    } else if (*table_cmd) {
      table_opt.datasets = split_list(table_datasets);
      if (!table_kernels.empty()) {
        table_opt.kernels.clear();
        for (const std::string& name : split_list(table_kernels)) {
          const auto kind = kernel_from_name(name);
          if (!kind) throw std::runtime_error("unknown kernel '" + name + "'");
          table_opt.kernels.push_back(*kind);
        }
      }
      table_opt.normalize_data = !table_raw;
      const TableResult table = run_table(table_opt);
      atomic_write_text(table_degree_out, table_to_csv(table, table.avg_degree));
      atomic_write_text(table_clustering_out,
                        table_to_csv(table, table.avg_clustering));
    } else if (*render_cmd) {
      const LoadedNetwork loaded = read_network_json(render_net);
      Dataset data;
      if (render_src.present()) {
        data = render_src.resolve();
      } else {
        data.cols = loaded.network.dimension();
      }
      write_svg(loaded.network, data, render_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
