#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "kgng/io.hpp"
#include "kgng/svg.hpp"
#include "kgng/trainer.hpp"

using namespace kgng;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("network json round trip") {
  const Dataset data = generate(SyntheticKind::Moons, 200, 3);
  HyperParams hp;
  hp.iterations = 1500;
  const auto r = train(data, {KernelKind::Gaussian, 1.8}, hp, 4);

  NetworkMeta meta;
  meta.kernel = "gaussian";
  meta.gamma = 1.8;
  meta.iterations = hp.iterations;
  meta.seed = 4;
  meta.dataset = "moons";

  const auto path = std::filesystem::temp_directory_path() / "kgng_net.json";
  write_network_json(r.network, meta, path.string());

  const LoadedNetwork back = read_network_json(path.string());
  CHECK(back.meta.kernel == "gaussian");
  CHECK(back.meta.gamma == 1.8);
  CHECK(back.meta.iterations == 1500);
  CHECK(back.meta.seed == 4);
  CHECK(back.meta.dataset == "moons");

  REQUIRE(back.network.unit_count() == r.network.unit_count());
  REQUIRE(back.network.edge_count() == r.network.edge_count());
  for (std::size_t i = 0; i < r.network.unit_count(); ++i) {
    CHECK(back.network.units()[i].id == r.network.units()[i].id);
    CHECK(back.network.units()[i].weight == r.network.units()[i].weight);
    CHECK(back.network.units()[i].error == r.network.units()[i].error);
  }
  const auto ea = r.network.edges();
  const auto eb = back.network.edges();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    CHECK(ea[i].u == eb[i].u);
    CHECK(ea[i].v == eb[i].v);
    CHECK(ea[i].age == eb[i].age);
  }

  // Re-export is byte-identical.
  CHECK(network_to_json(back.network, back.meta) ==
        network_to_json(r.network, meta));
  std::filesystem::remove(path);
}

TEST_CASE("json import validates structure") {
  const auto path = std::filesystem::temp_directory_path() / "kgng_bad.json";
  {
    std::ofstream f(path);
    f << "{\"units\": []}";
  }
  CHECK_THROWS_AS(read_network_json(path.string()), std::runtime_error);
  {
    std::ofstream f(path);
    f << "not json";
  }
  CHECK_THROWS_AS(read_network_json(path.string()), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("edge list export") {
  std::vector<Unit> units = {{0, {0.0, 0.0}, 0.0},
                             {1, {1.0, 0.0}, 0.0},
                             {2, {2.0, 0.0}, 0.0}};
  const GngNetwork net(2, units, {{1, 2, 7}, {0, 1, 3}});
  const auto path = std::filesystem::temp_directory_path() / "kgng_edges.txt";
  write_edge_list(net, path.string());
  CHECK(slurp(path) == "0 1 3\n1 2 7\n");
  std::filesystem::remove(path);
}

TEST_CASE("trace csv") {
  TrainingTrace trace;
  trace.schedule = {1, 10};
  trace.records = {{1, 0.5, 0.25, 2, 1}, {10, 0.125, 0.0625, 3, 3}};
  const std::string csv = trace_to_csv(trace);
  CHECK(csv == "iteration,mse,kmse,units,edges\n"
               "1,0.5,0.25,2,1\n"
               "10,0.125,0.0625,3,3\n");
}

TEST_CASE("metrics json") {
  const std::string j = metrics_to_json({0.5, 0.25, 4.0, 0.375});
  CHECK(j ==
        "{\"mse\":0.5,\"kmse\":0.25,\"avg_degree\":4.0,\"avg_clustering\":0.375}\n");
}

TEST_CASE("svg rendering") {
  SUBCASE("minimal network element counts") {
    std::vector<Unit> units = {{0, {0.0, 0.0}, 0.0}, {1, {1.0, 1.0}, 0.0}};
    const GngNetwork net(2, units, {{0, 1, 0}});
    Dataset data;
    data.cols = 2;
    const std::string svg = render_svg(net, data);
    CHECK(count_occurrences(svg, "<line ") == 1);
    CHECK(count_occurrences(svg, "fill=\"black\"") == 2);
    CHECK(count_occurrences(svg, "fill=\"gray\"") == 0);
    CHECK(svg.find("<svg xmlns") != std::string::npos);
  }

  SUBCASE("data points render gray") {
    std::vector<Unit> units = {{0, {0.25, 0.25}, 0.0}, {1, {0.75, 0.75}, 0.0}};
    const GngNetwork net(2, units, {{0, 1, 0}});
    const Dataset data = generate(SyntheticKind::Square, 50, 1);
    const std::string svg = render_svg(net, data);
    CHECK(count_occurrences(svg, "fill=\"gray\"") == 50);
    CHECK(count_occurrences(svg, "fill=\"black\"") == 2);
  }

  SUBCASE("3d inputs project onto the first two coordinates") {
    const Dataset data = generate(SyntheticKind::SwissRoll, 40, 1);
    HyperParams hp;
    hp.iterations = 300;
    const auto r = train(data, KernelSpec::plain(), hp, 1);
    const std::string svg = render_svg(r.network, data);
    CHECK(count_occurrences(svg, "fill=\"gray\"") == 40);
  }

  SUBCASE("write_svg creates the file") {
    std::vector<Unit> units = {{0, {0.0, 0.0}, 0.0}, {1, {1.0, 1.0}, 0.0}};
    const GngNetwork net(2, units, {{0, 1, 0}});
    Dataset data;
    data.cols = 2;
    const auto path = std::filesystem::temp_directory_path() / "kgng.svg";
    write_svg(net, data, path.string());
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove(path);
  }
}
