#include "kgng/trainer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kgng/metrics.hpp"
#include "kgng/rng.hpp"

namespace kgng {

void HyperParams::validate() const {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  if (a_max < 0) throw std::invalid_argument("a_max must be >= 0");
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1)");
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must be in (0, 1]");
  }
  if (!(eps_winner > 0.0 && eps_winner < 1.0)) {
    throw std::invalid_argument("eps_winner must be in (0, 1)");
  }
  if (!(eps_neighbor > 0.0 && eps_neighbor <= eps_winner)) {
    throw std::invalid_argument(
        "eps_neighbor must satisfy 0 < eps_neighbor <= eps_winner");
  }
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
}

WinnerPair find_winners(const GngNetwork& net, std::span<const double> x,
                        const KernelSpec& spec) {
  if (net.unit_count() < 2) {
    throw std::invalid_argument("winner search needs at least 2 units");
  }
  if (x.size() != net.dimension()) {
    throw std::invalid_argument("input dimension does not match the network");
  }
  spec.validate();

  UnitId s1 = 0, s2 = 0;
  double best1 = std::numeric_limits<double>::infinity();
  double best2 = std::numeric_limits<double>::infinity();
  // Ascending id scan with strict comparisons keeps the smallest id on ties.
  for (const Unit& u : net.units()) {
    const double d2 =
        feature_distance_sq_from_r2(spec, squared_euclidean(x, u.weight));
    if (d2 < best1) {
      best2 = best1;
      s2 = s1;
      best1 = d2;
      s1 = u.id;
    } else if (d2 < best2) {
      best2 = d2;
      s2 = u.id;
    }
  }
  return {s1, s2, best1};
}

namespace {

void pull_toward(GngNetwork& net, UnitId id, std::span<const double> x,
                 const KernelSpec& spec, double eps) {
  auto w = net.weight(id);
  const double coeff =
      distance_gradient_coefficient(spec, squared_euclidean(x, w));
  const double step = -eps * 0.5 * coeff;
  for (std::size_t d = 0; d < w.size(); ++d) {
    w[d] += step * (x[d] - w[d]);
  }
}

}  // namespace

void adapt(GngNetwork& net, std::span<const double> x,
           const WinnerPair& winners, const KernelSpec& spec,
           const HyperParams& hp) {
  pull_toward(net, winners.s1, x, spec, hp.eps_winner);
  for (UnitId j : net.neighbors(winners.s1)) {
    pull_toward(net, j, x, spec, hp.eps_neighbor);
  }
}

void accumulate_error(GngNetwork& net, const WinnerPair& winners) {
  net.add_error(winners.s1, winners.d2_s1);
}

void train_step(GngNetwork& net, std::span<const double> x, std::int64_t t,
                const KernelSpec& spec, const HyperParams& hp) {
  const WinnerPair winners = find_winners(net, x, spec);
  net.age_incident_edges(winners.s1);
  accumulate_error(net, winners);
  adapt(net, x, winners, spec, hp);
  net.connect_or_refresh(winners.s1, winners.s2);
  net.prune(hp.a_max);
  if (t % hp.lambda == 0 &&
      net.unit_count() < static_cast<std::size_t>(hp.n_max)) {
    net.insert_between_worst(hp.alpha);
  }
  net.decay_errors(hp.beta);
}

TrainResult train(const Dataset& data, const KernelSpec& spec,
                  const HyperParams& hp, std::uint64_t seed,
                  std::vector<std::int64_t> trace_schedule) {
  spec.validate();
  hp.validate();
  if (data.rows < 2) {
    throw std::invalid_argument("training needs at least 2 data points");
  }
  for (double v : data.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("dataset contains NaN or Inf");
    }
  }
  for (std::size_t i = 0; i < trace_schedule.size(); ++i) {
    const std::int64_t t = trace_schedule[i];
    if (t < 1 || t > hp.iterations ||
        (i > 0 && t <= trace_schedule[i - 1])) {
      throw std::invalid_argument(
          "trace schedule must be strictly increasing within [1, iterations]");
    }
  }

  Rng rng(seed);
  const std::size_t i1 = rng.uniform_index(data.rows);
  std::size_t i2 = i1;
  while (i2 == i1) i2 = rng.uniform_index(data.rows);

  TrainResult result{GngNetwork(data.point(i1), data.point(i2)),
                     TrainingTrace{trace_schedule, {}}};
  GngNetwork& net = result.network;

  std::size_t next_trace = 0;
  for (std::int64_t t = 1; t <= hp.iterations; ++t) {
    const auto x = data.point(rng.uniform_index(data.rows));
    train_step(net, x, t, spec, hp);
    if (next_trace < trace_schedule.size() &&
        trace_schedule[next_trace] == t) {
      result.trace.records.push_back({t, mse(net, data),
                                      kmse(net, data, spec), net.unit_count(),
                                      net.edge_count()});
      ++next_trace;
    }
  }
  return result;
}

}  // namespace kgng
