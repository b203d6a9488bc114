#ifndef KGNG_IO_HPP
#define KGNG_IO_HPP

#include <cstdint>
#include <string>

#include "kgng/metrics.hpp"
#include "kgng/network.hpp"
#include "kgng/trainer.hpp"

namespace kgng {

// Provenance block stored alongside an exported network.
struct NetworkMeta {
  std::string kernel = "plain";
  double gamma = 1.0;
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;
  std::string dataset;
};

// Writes the whole file atomically (temp file + rename).
void atomic_write_text(const std::string& path, const std::string& content);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// {"meta": {...}, "units": [{id, weight, error}...], "edges": [{u, v, age}...]}
// with units and edges in ascending order.
std::string network_to_json(const GngNetwork& net, const NetworkMeta& meta);
void write_network_json(const GngNetwork& net, const NetworkMeta& meta,
                        const std::string& path);

struct LoadedNetwork {
  GngNetwork network;
  NetworkMeta meta;
};
LoadedNetwork read_network_json(const std::string& path);

// One "u v age" line per edge, ascending.
void write_edge_list(const GngNetwork& net, const std::string& path);

// Header iteration,mse,kmse,units,edges.
std::string trace_to_csv(const TrainingTrace& trace);
void write_trace_csv(const TrainingTrace& trace, const std::string& path);

// Single JSON object {"mse", "kmse", "avg_degree", "avg_clustering"}.
std::string metrics_to_json(const MetricsReport& report);

}  // namespace kgng

#endif  // KGNG_IO_HPP
