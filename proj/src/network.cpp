#include "kgng/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kgng {

namespace {

void insert_sorted(std::vector<UnitId>& ids, UnitId id) {
  ids.insert(std::lower_bound(ids.begin(), ids.end(), id), id);
}

void erase_sorted(std::vector<UnitId>& ids, UnitId id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it != ids.end() && *it == id) ids.erase(it);
}

}  // namespace

GngNetwork::GngNetwork(std::span<const double> p1, std::span<const double> p2) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("initial points have different dimensions (" +
                                std::to_string(p1.size()) + " vs " +
                                std::to_string(p2.size()) + ")");
  }
  if (p1.empty()) {
    throw std::invalid_argument("initial points must have dimension >= 1");
  }
  dimension_ = p1.size();
  units_.push_back({next_id_++, {p1.begin(), p1.end()}, 0.0});
  units_.push_back({next_id_++, {p2.begin(), p2.end()}, 0.0});
  neighbors_.resize(2);
  insert_edge_internal(units_[0].id, units_[1].id, 0);
}

GngNetwork::GngNetwork(std::size_t dimension, std::vector<Unit> units,
                       std::vector<EdgeRecord> edges) {
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  if (units.empty()) throw std::invalid_argument("a network needs at least one unit");
  dimension_ = dimension;
  std::sort(units.begin(), units.end(),
            [](const Unit& a, const Unit& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    if (i > 0 && units[i - 1].id == u.id) {
      throw std::invalid_argument("duplicate unit id " + std::to_string(u.id));
    }
    if (u.weight.size() != dimension_) {
      throw std::invalid_argument("unit " + std::to_string(u.id) +
                                  " has wrong weight dimension");
    }
    if (!(u.error >= 0.0) || !std::isfinite(u.error)) {
      throw std::invalid_argument("unit " + std::to_string(u.id) +
                                  " has invalid error");
    }
  }
  units_ = std::move(units);
  neighbors_.resize(units_.size());
  next_id_ = units_.back().id + 1;
  for (const EdgeRecord& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on unit " + std::to_string(e.u));
    }
    if (e.age < 0) throw std::invalid_argument("negative edge age");
    if (!has_unit(e.u) || !has_unit(e.v)) {
      throw std::invalid_argument("edge endpoint refers to a missing unit");
    }
    if (has_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  "--" + std::to_string(e.v));
    }
    insert_edge_internal(e.u, e.v, e.age);
  }
}

std::size_t GngNetwork::index_of(UnitId id) const {
  auto it = std::lower_bound(
      units_.begin(), units_.end(), id,
      [](const Unit& u, UnitId value) { return u.id < value; });
  if (it == units_.end() || it->id != id) {
    throw std::invalid_argument("unknown unit id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - units_.begin());
}

bool GngNetwork::has_unit(UnitId id) const {
  auto it = std::lower_bound(
      units_.begin(), units_.end(), id,
      [](const Unit& u, UnitId value) { return u.id < value; });
  return it != units_.end() && it->id == id;
}

const Unit& GngNetwork::unit(UnitId id) const { return units_[index_of(id)]; }

std::span<double> GngNetwork::weight(UnitId id) {
  return units_[index_of(id)].weight;
}

void GngNetwork::add_error(UnitId id, double amount) {
  if (!(amount >= 0.0)) {
    throw std::invalid_argument("error increment must be >= 0");
  }
  units_[index_of(id)].error += amount;
}

bool GngNetwork::has_edge(UnitId a, UnitId b) const {
  return edge_ages_.count(edge_key(a, b)) != 0;
}

std::optional<int> GngNetwork::edge_age(UnitId a, UnitId b) const {
  auto it = edge_ages_.find(edge_key(a, b));
  if (it == edge_ages_.end()) return std::nullopt;
  return it->second;
}

const std::vector<UnitId>& GngNetwork::neighbors(UnitId id) const {
  return neighbors_[index_of(id)];
}

void GngNetwork::insert_edge_internal(UnitId a, UnitId b, int age) {
  edge_ages_.emplace(edge_key(a, b), age);
  insert_sorted(neighbors_[index_of(a)], b);
  insert_sorted(neighbors_[index_of(b)], a);
}

void GngNetwork::remove_edge_internal(UnitId a, UnitId b) {
  edge_ages_.erase(edge_key(a, b));
  erase_sorted(neighbors_[index_of(a)], b);
  erase_sorted(neighbors_[index_of(b)], a);
}

void GngNetwork::connect_or_refresh(UnitId a, UnitId b) {
  if (a == b) {
    throw std::invalid_argument("self-loops are not allowed (unit " +
                                std::to_string(a) + ")");
  }
  index_of(a);
  index_of(b);
  auto it = edge_ages_.find(edge_key(a, b));
  if (it != edge_ages_.end()) {
    it->second = 0;
  } else {
    insert_edge_internal(a, b, 0);
  }
}

void GngNetwork::age_incident_edges(UnitId s1) {
  for (UnitId nbr : neighbors_[index_of(s1)]) {
    ++edge_ages_[edge_key(s1, nbr)];
  }
}

PruneResult GngNetwork::prune(int a_max) {
  if (a_max < 0) throw std::invalid_argument("a_max must be >= 0");
  PruneResult result;

  std::vector<std::pair<UnitId, UnitId>> expired;
  for (const auto& [key, age] : edge_ages_) {
    if (age > a_max) expired.push_back(key);
  }
  std::vector<UnitId> touched;
  for (const auto& [a, b] : expired) {
    remove_edge_internal(a, b);
    touched.push_back(a);
    touched.push_back(b);
  }
  result.removed_edges = expired.size();

  // Only units isolated by the removals above are deleted.
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (auto it = touched.rbegin(); it != touched.rend(); ++it) {
    const std::size_t idx = index_of(*it);
    if (neighbors_[idx].empty()) {
      units_.erase(units_.begin() + static_cast<std::ptrdiff_t>(idx));
      neighbors_.erase(neighbors_.begin() + static_cast<std::ptrdiff_t>(idx));
      ++result.removed_units;
    }
  }
  return result;
}

std::optional<UnitId> GngNetwork::insert_between_worst(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1)");
  }
  if (units_.size() < 2) {
    throw std::invalid_argument("insertion needs at least two units");
  }

  // Highest cumulative error; ascending scan keeps the smallest id on ties.
  std::size_t q_idx = 0;
  for (std::size_t i = 1; i < units_.size(); ++i) {
    if (units_[i].error > units_[q_idx].error) q_idx = i;
  }
  const UnitId q = units_[q_idx].id;

  if (neighbors_[q_idx].empty()) return std::nullopt;
  UnitId f = neighbors_[q_idx][0];
  for (UnitId nbr : neighbors_[q_idx]) {
    if (unit(nbr).error > unit(f).error) f = nbr;
  }

  const std::size_t f_idx = index_of(f);
  std::vector<double> midpoint(dimension_);
  for (std::size_t d = 0; d < dimension_; ++d) {
    midpoint[d] = (units_[q_idx].weight[d] + units_[f_idx].weight[d]) / 2.0;
  }

  units_[q_idx].error *= alpha;
  units_[f_idx].error *= alpha;

  const UnitId r = next_id_++;
  units_.push_back({r, std::move(midpoint), units_[q_idx].error});
  neighbors_.emplace_back();

  remove_edge_internal(q, f);
  insert_edge_internal(r, q, 0);
  insert_edge_internal(r, f, 0);
  return r;
}

void GngNetwork::decay_errors(double beta) {
  if (!(beta > 0.0) || !(beta <= 1.0)) {
    throw std::invalid_argument("beta must be in (0, 1]");
  }
  for (Unit& u : units_) u.error *= beta;
}

std::vector<EdgeRecord> GngNetwork::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_ages_.size());
  for (const auto& [key, age] : edge_ages_) {
    out.push_back({key.first, key.second, age});
  }
  return out;
}

}  // namespace kgng
