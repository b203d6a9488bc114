#ifndef KGNG_METRICS_HPP
#define KGNG_METRICS_HPP

#include "kgng/dataset.hpp"
#include "kgng/kernels.hpp"
#include "kgng/network.hpp"

namespace kgng {

struct MetricsReport {
  double mse = 0.0;
  double kmse = 0.0;
  double avg_degree = 0.0;
  double avg_clustering = 0.0;
};

// Mean over data points of the squared Euclidean distance to the nearest
// unit. The per-point scan is OpenMP-parallel; the final accumulation is
// in fixed row order, so results match metrics::serial bit for bit
// regardless of thread count.
double mse(const GngNetwork& net, const Dataset& data);

// Same, measured with the kernel's feature-space squared distance.
// Equals mse exactly for the Plain kind.
double kmse(const GngNetwork& net, const Dataset& data,
            const KernelSpec& spec);

// 2 * |edges| / |units|.
double average_degree(const GngNetwork& net);

// Mean over units of 2*t_i / (k_i*(k_i - 1)), zero where k_i < 2,
// with t_i the number of triangles through unit i.
double average_clustering(const GngNetwork& net);

MetricsReport compute_metrics(const GngNetwork& net, const Dataset& data,
                              const KernelSpec& spec);

// Plain single-threaded loops, kept as the reference implementations for
// tests and the benchmark.
namespace serial {
double mse(const GngNetwork& net, const Dataset& data);
double kmse(const GngNetwork& net, const Dataset& data,
            const KernelSpec& spec);
}  // namespace serial

}  // namespace kgng

#endif  // KGNG_METRICS_HPP
