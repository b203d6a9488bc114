#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kgng/metrics.hpp"
#include "kgng/rng.hpp"

using namespace kgng;

namespace {

std::vector<double> V(std::initializer_list<double> v) { return v; }

GngNetwork grid_net(const std::vector<std::vector<double>>& weights,
                    const std::vector<std::pair<UnitId, UnitId>>& edges) {
  std::vector<Unit> units;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    units.push_back({static_cast<UnitId>(i), weights[i], 0.0});
  }
  std::vector<EdgeRecord> recs;
  for (auto [u, v] : edges) recs.push_back({u, v, 0});
  return GngNetwork(weights.front().size(), std::move(units),
                    std::move(recs));
}

Dataset points(const std::vector<std::vector<double>>& rows) {
  Dataset d;
  d.rows = rows.size();
  d.cols = rows.front().size();
  for (const auto& r : rows) {
    d.values.insert(d.values.end(), r.begin(), r.end());
  }
  return d;
}

// Independent clustering oracle: enumerate every node triple and count
// full triangles, then apply the local formula per node.
double clustering_by_triples(const GngNetwork& net) {
  const auto& units = net.units();
  const std::size_t n = units.size();
  std::vector<std::size_t> triangles(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (net.has_edge(units[i].id, units[j].id) &&
            net.has_edge(units[j].id, units[k].id) &&
            net.has_edge(units[i].id, units[k].id)) {
          ++triangles[i];
          ++triangles[j];
          ++triangles[k];
        }
      }
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<double>(net.degree(units[i].id));
    if (k >= 2.0) sum += 2.0 * static_cast<double>(triangles[i]) / (k * (k - 1.0));
  }
  return sum / static_cast<double>(n);
}

GngNetwork random_graph(Rng& rng, std::size_t max_nodes) {
  const std::size_t n = 2 + rng.uniform_index(max_nodes - 1);
  std::vector<Unit> units;
  for (std::size_t i = 0; i < n; ++i) {
    units.push_back({static_cast<UnitId>(i),
                     {rng.uniform(), rng.uniform()},
                     rng.uniform()});
  }
  const double p = rng.uniform(0.05, 0.6);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) {
        edges.push_back({static_cast<UnitId>(i), static_cast<UnitId>(j),
                         static_cast<int>(rng.uniform_index(51))});
      }
    }
  }
  return GngNetwork(2, std::move(units), std::move(edges));
}

}  // namespace

TEST_CASE("mse basics") {
  SUBCASE("exact cover gives zero") {
    const auto net = grid_net({{0.0, 0.0}, {1.0, 1.0}}, {{0, 1}});
    const auto data = points({{0.0, 0.0}, {1.0, 1.0}});
    CHECK(mse(net, data) == 0.0);
  }
  SUBCASE("single unit between two points") {
    const auto net = grid_net({{1.0, 0.0}}, {});
    const auto data = points({{0.0, 0.0}, {2.0, 0.0}});
    CHECK(mse(net, data) == 1.0);
  }
  SUBCASE("single pair") {
    const auto net = grid_net({{3.0, 4.0}}, {});
    const auto data = points({{0.0, 0.0}});
    CHECK(mse(net, data) == 25.0);
  }
  SUBCASE("empty inputs rejected") {
    const auto net = grid_net({{0.0, 0.0}}, {});
    Dataset empty;
    empty.cols = 2;
    CHECK_THROWS_AS(mse(net, empty), std::invalid_argument);
  }
}

TEST_CASE("kmse equals mse for the plain kind and stays bounded for gaussian") {
  Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n_units = 2 + rng.uniform_index(10);
    std::vector<std::vector<double>> ws;
    for (std::size_t i = 0; i < n_units; ++i) {
      ws.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    }
    std::vector<std::pair<UnitId, UnitId>> es;
    for (std::size_t i = 1; i < n_units; ++i) {
      es.push_back({static_cast<UnitId>(i - 1), static_cast<UnitId>(i)});
    }
    const auto net = grid_net(ws, es);

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 50; ++i) {
      rows.push_back({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
    }
    const auto data = points(rows);

    CHECK(kmse(net, data, KernelSpec::plain()) == mse(net, data));
    // Gaussian feature distance is bounded above by 2.
    CHECK(kmse(net, data, KernelSpec::make(KernelKind::Gaussian, 0.3)) < 2.0);
  }
}

TEST_CASE("kmse zero when every point sits on a unit") {
  const auto net = grid_net({{0.0, 0.0}, {1.0, 0.0}}, {{0, 1}});
  const auto data = points({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
  for (KernelKind kind : all_kernel_kinds()) {
    CHECK(kmse(net, data, KernelSpec{kind, 1.7}) == 0.0);
  }
}

TEST_CASE("parallel quantization metrics match the serial reference exactly") {
  Rng rng(33);
  for (int rep = 0; rep < 10; ++rep) {
    const auto net = random_graph(rng, 30);
    std::vector<std::vector<double>> rows;
    const std::size_t n = 100 + rng.uniform_index(400);
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)});
    }
    const auto data = points(rows);
    CHECK(mse(net, data) == serial::mse(net, data));
    for (KernelKind kind : all_kernel_kinds()) {
      const KernelSpec spec{kind, 1.8};
      CHECK(kmse(net, data, spec) == serial::kmse(net, data, spec));
    }
  }
}

TEST_CASE("mse is invariant under permutations") {
  const auto net1 = grid_net({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1}});
  const auto net2 = grid_net({{0.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}}, {{0, 1}});
  const auto data1 = points({{0.2, 0.1}, {0.9, 0.3}, {0.1, 0.8}});
  const auto data2 = points({{0.1, 0.8}, {0.2, 0.1}, {0.9, 0.3}});
  CHECK(mse(net1, data1) == doctest::Approx(mse(net2, data2)).epsilon(1e-15));
}

TEST_CASE("average_degree") {
  SUBCASE("triangle") {
    const auto net =
        grid_net({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(average_degree(net) == 2.0);
  }
  SUBCASE("path of three") {
    const auto net =
        grid_net({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, {{0, 1}, {1, 2}});
    CHECK(average_degree(net) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("initial pair") {
    const auto net = grid_net({{0.0, 0.0}, {1.0, 0.0}}, {{0, 1}});
    CHECK(average_degree(net) == 1.0);
  }
}

TEST_CASE("average_clustering closed cases") {
  SUBCASE("triangle is fully clustered") {
    const auto net =
        grid_net({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(average_clustering(net) == 1.0);
  }
  SUBCASE("path has no triangles") {
    const auto net =
        grid_net({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, {{0, 1}, {1, 2}});
    CHECK(average_clustering(net) == 0.0);
  }
  SUBCASE("diamond") {
    // K4 minus one edge; frozen from triple enumeration by hand: 5/6.
    const auto net = grid_net(
        {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(average_clustering(net) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  }
}

TEST_CASE("clustering matches the triple-enumeration oracle") {
  Rng rng(77);
  for (int rep = 0; rep < 200; ++rep) {
    const auto net = random_graph(rng, 30);
    CHECK(std::abs(average_clustering(net) - clustering_by_triples(net)) <=
          1e-12);
  }
}

TEST_CASE("average_degree equals the handshake identity on random graphs") {
  Rng rng(78);
  for (int rep = 0; rep < 100; ++rep) {
    const auto net = random_graph(rng, 25);
    CHECK(average_degree(net) ==
          doctest::Approx(2.0 * static_cast<double>(net.edge_count()) /
                          static_cast<double>(net.unit_count()))
              .epsilon(1e-15));
  }
}
