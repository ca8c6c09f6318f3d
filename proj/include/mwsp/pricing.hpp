#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mwsp/core.hpp"

namespace mwsp {

enum class PricingStrategy { kExact, kHeuristic, kHybrid };

struct PricingConfig {
  PricingStrategy strategy = PricingStrategy::kHybrid;
  int max_new_columns = 50;  // stop a pricing sweep after this many finds
  int restarts = 3;          // local-search seeds per subproblem
  std::uint64_t seed = 0;
  int exact_node_limit = 24;  // branch-and-bound refuses larger subproblems
  double rc_tolerance = 1e-9;
  int threads = 1;
};

// One neighborhood's pricing subproblem: the candidate nodes, their aggregate
// duals, and dense internal pair weights (doubled thetas, matching the
// hypothesis cost convention). Pairs with blocked thetas are conflicts and may
// never be chosen together.
class Subproblem {
 public:
  Subproblem(const Instance& instance, std::vector<ObservationId> nodes,
             const std::vector<double>& lambda);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<ObservationId>& nodes() const { return nodes_; }
  double lambda(int i) const { return lambda_[static_cast<std::size_t>(i)]; }
  bool conflict(int i, int j) const {
    return weights_[pos(i, j)] == kBlocked;
  }
  // Doubled theta for a feasible pair; 0 on the diagonal.
  double weight(int i, int j) const { return weights_[pos(i, j)]; }

  // Reduced cost of the hypothesis made of the chosen local indices:
  // sum of pair weights minus collected duals. Chosen must be conflict-free.
  double objective(std::span<const int> chosen) const;
  Column to_column(std::span<const int> chosen) const;

 private:
  static constexpr double kBlocked = std::numeric_limits<double>::infinity();
  std::size_t pos(int i, int j) const {
    return static_cast<std::size_t>(i) * nodes_.size() +
           static_cast<std::size_t>(j);
  }

  std::vector<ObservationId> nodes_;  // sorted
  std::vector<double> lambda_;        // per local index, clamped to <= 0
  std::vector<double> weights_;       // dense, kBlocked marks conflicts
};

struct PricingResult {
  std::optional<Column> column;  // empty when the minimum is >= 0
  double reduced_cost = 0.0;
};

// Gamma_g minus the duals collected by g's members.
double reduced_cost(const Column& column, const std::vector<double>& lambda);

// Global minimizer over conflict-free node subsets by depth-first
// branch-and-bound. Throws SizeLimitError above node_limit.
PricingResult price_exact(const Subproblem& subproblem, int node_limit = 24);

// Single-flip improving search from a handful of seeds: the most promising
// dual-negative singletons, one pair-grown seed, and rng singletons if seeds
// run short. Never returns a conflicted column.
PricingResult price_heuristic(const Subproblem& subproblem,
                              const PricingConfig& config,
                              std::uint64_t restart_seed);

// Instance-static pricing data: the ranking and the non-dominated restricted
// neighborhoods, largest first.
struct PricingContext {
  explicit PricingContext(const Instance& instance);
  Ranking ranking;
  std::vector<std::vector<ObservationId>> neighborhoods;
};

struct PricingOutcome {
  std::vector<Column> columns;         // deduplicated, reduced cost < -tol
  bool skipped_oversized = false;      // a verify pass had to skip a neighborhood
};

// One pricing sweep over the non-dominated neighborhoods. Normal passes run
// the configured strategy (hybrid prices heuristically); verify passes run
// exact pricing on every neighborhood within the node limit and flag the
// ones beyond it.
PricingOutcome price_all(const Instance& instance, const PricingContext& context,
                         const std::vector<double>& lambda,
                         const PricingConfig& config, int iteration = 0,
                         bool verify_pass = false);

// Convenience overload building the context on the fly.
std::vector<Column> price_all(const Instance& instance,
                              const std::vector<double>& lambda,
                              const PricingConfig& config);

}  // namespace mwsp
