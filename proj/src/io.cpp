#include "kgng/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kgng {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, ptr};
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << content;
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string network_to_json(const GngNetwork& net, const NetworkMeta& meta) {
  ordered_json j;
  j["meta"] = {{"kernel", meta.kernel},
               {"gamma", meta.gamma},
               {"iterations", meta.iterations},
               {"seed", meta.seed},
               {"dataset", meta.dataset}};
  j["units"] = ordered_json::array();
  for (const Unit& u : net.units()) {
    j["units"].push_back(
        {{"id", u.id}, {"weight", u.weight}, {"error", u.error}});
  }
  j["edges"] = ordered_json::array();
  for (const EdgeRecord& e : net.edges()) {
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"age", e.age}});
  }
  return j.dump(2) + "\n";
}

void write_network_json(const GngNetwork& net, const NetworkMeta& meta,
                        const std::string& path) {
  atomic_write_text(path, network_to_json(net, meta));
}

LoadedNetwork read_network_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  ordered_json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": invalid JSON: " + e.what());
  }

  NetworkMeta meta;
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    meta.kernel = m.value("kernel", meta.kernel);
    meta.gamma = m.value("gamma", meta.gamma);
    meta.iterations = m.value("iterations", meta.iterations);
    meta.seed = m.value("seed", meta.seed);
    meta.dataset = m.value("dataset", meta.dataset);
  }

  if (!j.contains("units") || !j["units"].is_array() || j["units"].empty()) {
    throw std::runtime_error(path + ": missing or empty units array");
  }
  std::vector<Unit> units;
  for (const auto& ju : j["units"]) {
    Unit u;
    u.id = ju.at("id").get<UnitId>();
    u.weight = ju.at("weight").get<std::vector<double>>();
    u.error = ju.at("error").get<double>();
    units.push_back(std::move(u));
  }
  std::vector<EdgeRecord> edges;
  for (const auto& je : j.value("edges", ordered_json::array())) {
    edges.push_back({je.at("u").get<UnitId>(), je.at("v").get<UnitId>(),
                     je.at("age").get<int>()});
  }

  const std::size_t dimension = units.front().weight.size();
  return {GngNetwork(dimension, std::move(units), std::move(edges)), meta};
}

void write_edge_list(const GngNetwork& net, const std::string& path) {
  std::ostringstream out;
  for (const EdgeRecord& e : net.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.age << '\n';
  }
  atomic_write_text(path, out.str());
}

std::string trace_to_csv(const TrainingTrace& trace) {
  std::ostringstream out;
  out << "iteration,mse,kmse,units,edges\n";
  for (const TraceRecord& r : trace.records) {
    out << r.iteration << ',' << format_double(r.mse) << ','
        << format_double(r.kmse) << ',' << r.units << ',' << r.edges << '\n';
  }
  return out.str();
}

void write_trace_csv(const TrainingTrace& trace, const std::string& path) {
  atomic_write_text(path, trace_to_csv(trace));
}

std::string metrics_to_json(const MetricsReport& report) {
  ordered_json j = {{"mse", report.mse},
                    {"kmse", report.kmse},
                    {"avg_degree", report.avg_degree},
                    {"avg_clustering", report.avg_clustering}};
  return j.dump() + "\n";
}

}  // namespace kgng
