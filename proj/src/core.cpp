#include "mwsp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mwsp {

Instance::Instance(ObservationId n_observations) : n_(n_observations) {
  if (n_observations < 0) {
    throw std::invalid_argument("negative observation count");
  }
  adj_.resize(static_cast<std::size_t>(n_));
}

std::uint64_t Instance::key(ObservationId a, ObservationId b) const {
  auto lo = static_cast<std::uint64_t>(std::min(a, b));
  auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return lo * static_cast<std::uint64_t>(n_) + hi;
}

bool Instance::add_pair(ObservationId a, ObservationId b, double theta) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw std::invalid_argument("observation id out of range");
  }
  if (a == b) {
    throw std::invalid_argument("self pair not allowed");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("pair cost must be finite; omit the pair to block it");
  }
  auto [it, inserted] = pair_map_.emplace(key(a, b), theta);
  (void)it;
  if (!inserted) return false;
  auto insert_sorted = [](std::vector<std::pair<ObservationId, double>>& v,
                          ObservationId id, double t) {
    auto pos = std::lower_bound(
        v.begin(), v.end(), id,
        [](const auto& p, ObservationId x) { return p.first < x; });
    v.insert(pos, {id, t});
  };
  insert_sorted(adj_[static_cast<std::size_t>(a)], b, theta);
  insert_sorted(adj_[static_cast<std::size_t>(b)], a, theta);
  return true;
}

std::optional<double> Instance::pair_cost(ObservationId a,
                                          ObservationId b) const {
  if (a == b) return 0.0;
  auto it = pair_map_.find(key(a, b));
  if (it == pair_map_.end()) return std::nullopt;
  return it->second;
}

bool Instance::pair_feasible(ObservationId a, ObservationId b) const {
  return a == b || pair_map_.count(key(a, b)) > 0;
}

double Column::xi_for(ObservationId d) const {
  auto it = std::lower_bound(members.begin(), members.end(), d);
  if (it == members.end() || *it != d) return 0.0;
  return xi[static_cast<std::size_t>(it - members.begin())];
}

std::optional<double> hypothesis_cost(const Instance& instance,
                                      std::span<const ObservationId> members) {
  double total = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) continue;
      auto theta = instance.pair_cost(members[i], members[j]);
      if (!theta) return std::nullopt;
      total += 2.0 * *theta;
    }
  }
  return total;
}

std::optional<Column> make_column(const Instance& instance,
                                  std::vector<ObservationId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) return std::nullopt;
  auto cost = hypothesis_cost(instance, members);
  if (!cost) return std::nullopt;
  Column column;
  column.members = std::move(members);
  column.cost = *cost;
  return column;
}

std::vector<ObservationId> neighborhood(const Instance& instance,
                                        ObservationId d) {
  const auto& adj = instance.adjacency(d);
  std::vector<ObservationId> result;
  result.reserve(adj.size() + 1);
  bool placed = false;
  for (const auto& [id, theta] : adj) {
    (void)theta;
    if (!placed && d < id) {
      result.push_back(d);
      placed = true;
    }
    result.push_back(id);
  }
  if (!placed) result.push_back(d);
  return result;
}

Ranking rank(const Instance& instance) {
  auto n = static_cast<std::size_t>(instance.n_observations());
  std::vector<ObservationId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ObservationId a, ObservationId b) {
    auto sa = instance.adjacency(a).size();
    auto sb = instance.adjacency(b).size();
    return sa != sb ? sa < sb : a < b;
  });
  Ranking ranking;
  ranking.rank_of.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    ranking.rank_of[static_cast<std::size_t>(order[pos])] =
        static_cast<std::int32_t>(pos);
  }
  return ranking;
}

std::vector<ObservationId> restricted_neighborhood(const Instance& instance,
                                                   const Ranking& ranking,
                                                   ObservationId d) {
  auto full = neighborhood(instance, d);
  auto rd = ranking.rank_of[static_cast<std::size_t>(d)];
  std::vector<ObservationId> result;
  result.reserve(full.size());
  for (ObservationId id : full) {
    if (ranking.rank_of[static_cast<std::size_t>(id)] >= rd) {
      result.push_back(id);
    }
  }
  return result;
}

namespace {

// True when `a` is a subset of `b`; both sorted.
bool subset_of(const std::vector<ObservationId>& a,
               const std::vector<ObservationId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<ObservationId>> nondominated_neighborhoods(
    const Instance& instance, const Ranking& ranking) {
  auto n = instance.n_observations();
  std::vector<std::vector<ObservationId>> sets;
  sets.reserve(static_cast<std::size_t>(n));
  for (ObservationId d = 0; d < n; ++d) {
    sets.push_back(restricted_neighborhood(instance, ranking, d));
  }
  std::sort(sets.begin(), sets.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<ObservationId>> result;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    // Candidates that could strictly contain sets[i] are earlier (larger).
    for (std::size_t j = 0; j < i && !dominated; ++j) {
      if (sets[j].size() > sets[i].size() && subset_of(sets[i], sets[j])) {
        dominated = true;
      }
    }
    if (!dominated) result.push_back(sets[i]);
  }
  return result;
}

}  // namespace mwsp
