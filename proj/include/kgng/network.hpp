#ifndef KGNG_NETWORK_HPP
#define KGNG_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kgng {

using UnitId = std::int64_t;

struct Unit {
  UnitId id = 0;
  std::vector<double> weight;
  double error = 0.0;  // cumulative, never negative
};

// Undirected edge; u < v after normalization.
struct EdgeRecord {
  UnitId u = 0;
  UnitId v = 0;
  int age = 0;
};

struct PruneResult {
  std::size_t removed_edges = 0;
  std::size_t removed_units = 0;
};

// Undirected graph of units with aged edges. Unit ids increase
// monotonically and are never reused, and all iteration happens in
// ascending id order, so identical operation sequences replay
// identically. Single-owner mutable structure: one mutator at a time.
class GngNetwork {
 public:
  // Two connected units with the given weights, edge age 0, errors 0.
  GngNetwork(std::span<const double> p1, std::span<const double> p2);

  // Builds a network from parts (the JSON import path and tests).
  // Validates dimensions, id uniqueness, edge endpoints, self-loops,
  // duplicate edges, and negative errors/ages.
  GngNetwork(std::size_t dimension, std::vector<Unit> units,
             std::vector<EdgeRecord> edges);

  std::size_t dimension() const { return dimension_; }
  std::size_t unit_count() const { return units_.size(); }
  std::size_t edge_count() const { return edge_ages_.size(); }

  // Ascending id order.
  const std::vector<Unit>& units() const { return units_; }
  const Unit& unit(UnitId id) const;
  bool has_unit(UnitId id) const;

  // Mutable weight view for the training updates.
  std::span<double> weight(UnitId id);
  void add_error(UnitId id, double amount);  // amount must be >= 0

  bool has_edge(UnitId a, UnitId b) const;
  std::optional<int> edge_age(UnitId a, UnitId b) const;
  // Neighbors of id in ascending id order.
  const std::vector<UnitId>& neighbors(UnitId id) const;
  std::size_t degree(UnitId id) const { return neighbors(id).size(); }

  // Edge (a, b) exists with age 0 afterwards. a == b is an error.
  void connect_or_refresh(UnitId a, UnitId b);

  // Adds 1 to the age of every edge incident to s1.
  void age_incident_edges(UnitId s1);

  // Removes edges with age strictly greater than a_max, then removes any
  // unit those removals left with degree 0.
  PruneResult prune(int a_max);

  // Splits the highest-error unit q and its highest-error neighbor f:
  // a new unit r at the midpoint replaces the q--f edge with r--q and
  // r--f, q's and f's errors shrink by alpha, and r starts with q's
  // updated error. Ties go to the smallest id. Returns the new unit's id,
  // or nullopt when q has no neighbor to split toward.
  std::optional<UnitId> insert_between_worst(double alpha);

  // Multiplies every cumulative error by beta.
  void decay_errors(double beta);

  // All edges sorted ascending by (u, v).
  std::vector<EdgeRecord> edges() const;

 private:
  std::size_t index_of(UnitId id) const;  // throws on unknown id
  void remove_edge_internal(UnitId a, UnitId b);
  void insert_edge_internal(UnitId a, UnitId b, int age);

  static std::pair<UnitId, UnitId> edge_key(UnitId a, UnitId b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  std::size_t dimension_ = 0;
  UnitId next_id_ = 0;
  std::vector<Unit> units_;                     // ascending id
  std::vector<std::vector<UnitId>> neighbors_;  // parallel to units_
  std::map<std::pair<UnitId, UnitId>, int> edge_ages_;
};

}  // namespace kgng

#endif  // KGNG_NETWORK_HPP
