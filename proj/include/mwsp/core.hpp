#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mwsp {

using ObservationId = std::int32_t;

// A correlation-clustering instance: n observations plus a sparse symmetric
// map of pairwise costs theta. A pair that is absent may never share a
// cluster (cost +infinity); theta_dd = 0 implicitly and self pairs are never
// stored. All stored values are finite.
class Instance {
 public:
  explicit Instance(ObservationId n_observations);

  ObservationId n_observations() const { return n_; }
  std::size_t pair_count() const { return pair_map_.size(); }

  // Stores theta for the unordered pair {a, b}. Returns false if the pair is
  // already present (the stored value is kept). Throws std::invalid_argument
  // on self pairs, out-of-range ids, or non-finite values.
  bool add_pair(ObservationId a, ObservationId b, double theta);

  // nullopt means the pair was blocked (theta = infinity). a == b yields 0.
  std::optional<double> pair_cost(ObservationId a, ObservationId b) const;
  bool pair_feasible(ObservationId a, ObservationId b) const;

  // Neighbors of d with finite theta, sorted by id, excluding d itself.
  const std::vector<std::pair<ObservationId, double>>& adjacency(
      ObservationId d) const {
    return adj_[static_cast<std::size_t>(d)];
  }

 private:
  std::uint64_t key(ObservationId a, ObservationId b) const;

  ObservationId n_;
  std::vector<std::vector<std::pair<ObservationId, double>>> adj_;
  std::unordered_map<std::uint64_t, double> pair_map_;
};

// A hypothesis: a candidate cluster of observations, viewed as a column of
// the set-packing master problem.
struct Column {
  std::vector<ObservationId> members;  // sorted, unique, nonempty
  double cost = 0.0;                   // Gamma_g, twice the sum over internal unordered pairs
  std::vector<double> xi;              // per-member removal bound, parallel to members; filled by the pool

  // Removal bound for observation d; 0 for non-members.
  double xi_for(ObservationId d) const;
};

// Unique rank per observation, increasing with neighborhood size. rank_of is
// a permutation of 0..n-1.
struct Ranking {
  std::vector<std::int32_t> rank_of;
};

// Cost of packing `members` into one hypothesis: the ordered double sum of
// internal thetas, i.e. twice the sum over unordered internal pairs. Returns
// nullopt when any internal pair is blocked (the hypothesis is illegal).
std::optional<double> hypothesis_cost(const Instance& instance,
                                      std::span<const ObservationId> members);

// Builds a Column with sorted members and computed cost; nullopt if any
// internal pair is blocked or members is empty.
std::optional<Column> make_column(const Instance& instance,
                                  std::vector<ObservationId> members);

// D_d: observations pairable with d, plus d itself. Sorted by id.
std::vector<ObservationId> neighborhood(const Instance& instance,
                                        ObservationId d);

// Ranks ordered by (|D_d|, d): more neighbors means higher rank, ties broken
// by ascending id so the ranking is reproducible.
Ranking rank(const Instance& instance);

// D*_d: members of D_d whose rank is >= rank of d. Sorted by id.
std::vector<ObservationId> restricted_neighborhood(const Instance& instance,
                                                   const Ranking& ranking,
                                                   ObservationId d);

// The maximal restricted neighborhoods under strict set inclusion,
// deduplicated. Ordered by descending size, then lexicographic members,
// which is the order pricing consumes them in.
std::vector<std::vector<ObservationId>> nondominated_neighborhoods(
    const Instance& instance, const Ranking& ranking);

}  // namespace mwsp
