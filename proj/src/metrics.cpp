#include "kgng/metrics.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace kgng {

namespace {

void check_inputs(const GngNetwork& net, const Dataset& data) {
  if (net.unit_count() == 0) throw std::invalid_argument("empty network");
  if (data.rows == 0) throw std::invalid_argument("empty dataset");
  if (data.cols != net.dimension()) {
    throw std::invalid_argument("dataset and network dimensions differ");
  }
}

double min_feature_d2(const GngNetwork& net, std::span<const double> x,
                      const KernelSpec& spec) {
  double best = std::numeric_limits<double>::infinity();
  for (const Unit& u : net.units()) {
    const double d2 =
        feature_distance_sq_from_r2(spec, squared_euclidean(x, u.weight));
    if (d2 < best) best = d2;
  }
  return best;
}

double quantization_error(const GngNetwork& net, const Dataset& data,
                          const KernelSpec& spec) {
  check_inputs(net, data);
  spec.validate();
  const auto n = static_cast<std::ptrdiff_t>(data.rows);
  std::vector<double> per_point(data.rows);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    per_point[static_cast<std::size_t>(i)] =
        min_feature_d2(net, data.point(static_cast<std::size_t>(i)), spec);
  }

  double sum = 0.0;
  for (double d2 : per_point) sum += d2;
  return sum / static_cast<double>(data.rows);
}

}  // namespace

double mse(const GngNetwork& net, const Dataset& data) {
  return quantization_error(net, data, KernelSpec::plain());
}

double kmse(const GngNetwork& net, const Dataset& data,
            const KernelSpec& spec) {
  return quantization_error(net, data, spec);
}

double average_degree(const GngNetwork& net) {
  if (net.unit_count() == 0) throw std::invalid_argument("empty network");
  return 2.0 * static_cast<double>(net.edge_count()) /
         static_cast<double>(net.unit_count());
}

double average_clustering(const GngNetwork& net) {
  if (net.unit_count() == 0) throw std::invalid_argument("empty network");
  double sum = 0.0;
  for (const Unit& u : net.units()) {
    const auto& nbrs = net.neighbors(u.id);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t triangles = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (net.has_edge(nbrs[a], nbrs[b])) ++triangles;
      }
    }
    sum += 2.0 * static_cast<double>(triangles) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(net.unit_count());
}

MetricsReport compute_metrics(const GngNetwork& net, const Dataset& data,
                              const KernelSpec& spec) {
  return {mse(net, data), kmse(net, data, spec), average_degree(net),
          average_clustering(net)};
}

namespace serial {

double mse(const GngNetwork& net, const Dataset& data) {
  return serial::kmse(net, data, KernelSpec::plain());
}

double kmse(const GngNetwork& net, const Dataset& data,
            const KernelSpec& spec) {
  check_inputs(net, data);
  spec.validate();
  double sum = 0.0;
  for (std::size_t i = 0; i < data.rows; ++i) {
    sum += min_feature_d2(net, data.point(i), spec);
  }
  return sum / static_cast<double>(data.rows);
}

}  // namespace serial

}  // namespace kgng
