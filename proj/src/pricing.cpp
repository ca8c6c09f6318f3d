#include "mwsp/pricing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "mwsp/errors.hpp"

namespace mwsp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t iteration,
                       std::uint64_t neighborhood) {
  return splitmix64(splitmix64(seed ^ (iteration << 32)) ^ neighborhood);
}

}  // namespace

Subproblem::Subproblem(const Instance& instance,
                       std::vector<ObservationId> nodes,
                       const std::vector<double>& lambda)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  auto k = nodes_.size();
  lambda_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    lambda_[i] = std::min(0.0, lambda[static_cast<std::size_t>(nodes_[i])]);
  }
  weights_.assign(k * k, kBlocked);
  for (std::size_t i = 0; i < k; ++i) {
    weights_[pos(static_cast<int>(i), static_cast<int>(i))] = 0.0;
    for (const auto& [other, theta] : instance.adjacency(nodes_[i])) {
      auto it = std::lower_bound(nodes_.begin(), nodes_.end(), other);
      if (it == nodes_.end() || *it != other) continue;
      auto j = static_cast<std::size_t>(it - nodes_.begin());
      weights_[i * k + j] = 2.0 * theta;
    }
  }
}

double Subproblem::objective(std::span<const int> chosen) const {
  double total = 0.0;
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    total -= lambda_[static_cast<std::size_t>(chosen[a])];
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      total += weights_[pos(chosen[a], chosen[b])];
    }
  }
  return total;
}

Column Subproblem::to_column(std::span<const int> chosen) const {
  std::vector<int> local(chosen.begin(), chosen.end());
  std::sort(local.begin(), local.end());
  Column column;
  column.members.reserve(local.size());
  double cost = 0.0;
  for (std::size_t a = 0; a < local.size(); ++a) {
    column.members.push_back(nodes_[static_cast<std::size_t>(local[a])]);
    for (std::size_t b = a + 1; b < local.size(); ++b) {
      cost += weights_[pos(local[a], local[b])];
    }
  }
  column.cost = cost;
  return column;
}

double reduced_cost(const Column& column, const std::vector<double>& lambda) {
  double rc = column.cost;
  for (ObservationId d : column.members) {
    rc -= lambda[static_cast<std::size_t>(d)];
  }
  return rc;
}

namespace {

// Depth-first branch-and-bound for exact pricing. The optimistic bound keeps
// the sum of still-attainable negative pair weights; dual terms are >= 0 and
// get charged only when a node is actually included.
class ExactSearch {
 public:
  explicit ExactSearch(const Subproblem& sub) : sub_(sub), k_(sub.size()) {
    order_.resize(static_cast<std::size_t>(k_));
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<double> score(static_cast<std::size_t>(k_), 0.0);
    for (int i = 0; i < k_; ++i) {
      double s = -sub_.lambda(i);
      for (int j = 0; j < k_; ++j) {
        if (j == i || sub_.conflict(i, j)) continue;
        s += std::min(0.0, sub_.weight(i, j));
      }
      score[static_cast<std::size_t>(i)] = s;
    }
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      double sa = score[static_cast<std::size_t>(a)];
      double sb = score[static_cast<std::size_t>(b)];
      return sa != sb ? sa < sb : a < b;
    });
    status_.assign(static_cast<std::size_t>(k_), kUndecided);
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        if (!sub_.conflict(i, j) && sub_.weight(i, j) < 0.0) {
          bound_ += sub_.weight(i, j);
        }
      }
    }
  }

  void run() { dfs(0); }

  const std::vector<int>& best_chosen() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  static constexpr std::uint8_t kUndecided = 0, kIn = 1, kOut = 2;

  double prune_guard() const { return 1e-9 * (1.0 + std::fabs(best_value_)); }

  // Drops from the optimistic bound each negative pair the status change
  // kills (i out) or realizes (i in, partner in); returns the removed mass.
  double retire_pairs(int i, bool now_in) {
    double removed = 0.0;
    for (int j = 0; j < k_; ++j) {
      if (j == i || sub_.conflict(i, j)) continue;
      double w = sub_.weight(i, j);
      if (w >= 0.0) continue;
      std::uint8_t sj = status_[static_cast<std::size_t>(j)];
      if (now_in ? sj == kIn : sj != kOut) removed += w;
    }
    bound_ -= removed;
    return removed;
  }

  void dfs(std::size_t depth) {
    while (depth < order_.size() &&
           status_[static_cast<std::size_t>(order_[depth])] != kUndecided) {
      ++depth;
    }
    if (current_ + bound_ >= best_value_ + prune_guard()) return;
    if (depth == order_.size()) return;
    int i = order_[depth];

    bool can_include = true;
    for (int c : chosen_) {
      if (sub_.conflict(i, c)) { can_include = false; break; }
    }
    if (can_include) {
      // Include i: pay its dual, realize pairs to the current set, force
      // conflicting undecided nodes out.
      double delta = -sub_.lambda(i);
      for (int c : chosen_) delta += sub_.weight(i, c);
      current_ += delta;
      status_[static_cast<std::size_t>(i)] = kIn;
      double retired = retire_pairs(i, /*now_in=*/true);
      chosen_.push_back(i);
      std::vector<std::pair<int, double>> forced;
      for (int j = 0; j < k_; ++j) {
        if (status_[static_cast<std::size_t>(j)] == kUndecided &&
            sub_.conflict(i, j)) {
          status_[static_cast<std::size_t>(j)] = kOut;
          forced.push_back({j, retire_pairs(j, /*now_in=*/false)});
        }
      }
      double canonical = sub_.objective(chosen_);
      if (canonical < best_value_) {
        best_value_ = canonical;
        best_ = chosen_;
      }
      dfs(depth + 1);
      for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
        status_[static_cast<std::size_t>(it->first)] = kUndecided;
        bound_ += it->second;
      }
      chosen_.pop_back();
      bound_ += retired;
      status_[static_cast<std::size_t>(i)] = kUndecided;
      current_ -= delta;
    }

    status_[static_cast<std::size_t>(i)] = kOut;
    double removed = retire_pairs(i, /*now_in=*/false);
    dfs(depth + 1);
    bound_ += removed;
    status_[static_cast<std::size_t>(i)] = kUndecided;
  }

  const Subproblem& sub_;
  int k_;
  std::vector<int> order_;
  std::vector<std::uint8_t> status_;
  std::vector<int> chosen_;
  double current_ = 0.0;
  double bound_ = 0.0;
  double best_value_ = 0.0;  // the empty hypothesis is always available
  std::vector<int> best_;
};

// Improving single-flip search over one subproblem, feasible at all times.
class FlipSearch {
 public:
  explicit FlipSearch(const Subproblem& sub) : sub_(sub), k_(sub.size()) {}

  void improve(const std::vector<int>& seed, std::vector<int>* out) {
    in_.assign(static_cast<std::size_t>(k_), 0);
    contrib_.assign(static_cast<std::size_t>(k_), 0.0);
    conflicts_.assign(static_cast<std::size_t>(k_), 0);
    for (int i : seed) {
      if (!in_[static_cast<std::size_t>(i)] &&
          conflicts_[static_cast<std::size_t>(i)] == 0) {
        flip(i);
      }
    }
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < k_; ++i) {
        double gain;
        if (in_[static_cast<std::size_t>(i)]) {
          gain = sub_.lambda(i) - contrib_[static_cast<std::size_t>(i)];
        } else if (conflicts_[static_cast<std::size_t>(i)] == 0) {
          gain = -sub_.lambda(i) + contrib_[static_cast<std::size_t>(i)];
        } else {
          continue;
        }
        if (gain < -1e-12) {
          flip(i);
          moved = true;
        }
      }
    }
    out->clear();
    for (int i = 0; i < k_; ++i) {
      if (in_[static_cast<std::size_t>(i)]) out->push_back(i);
    }
  }

 private:
  void flip(int i) {
    bool entering = in_[static_cast<std::size_t>(i)] == 0;
    double sign = entering ? 1.0 : -1.0;
    in_[static_cast<std::size_t>(i)] = entering ? 1 : 0;
    for (int j = 0; j < k_; ++j) {
      if (j == i) continue;
      if (sub_.conflict(i, j)) {
        conflicts_[static_cast<std::size_t>(j)] += entering ? 1 : -1;
      } else {
        contrib_[static_cast<std::size_t>(j)] += sign * sub_.weight(i, j);
      }
    }
  }

  const Subproblem& sub_;
  int k_;
  std::vector<std::uint8_t> in_;
  std::vector<double> contrib_;
  std::vector<int> conflicts_;
};

}  // namespace

PricingResult price_exact(const Subproblem& subproblem, int node_limit) {
  if (subproblem.size() > node_limit) {
    throw SizeLimitError("pricing subproblem exceeds the exact node limit");
  }
  ExactSearch search(subproblem);
  search.run();
  PricingResult result;
  if (search.best_chosen().empty()) return result;
  result.reduced_cost = search.best_value();
  result.column = subproblem.to_column(search.best_chosen());
  return result;
}

PricingResult price_heuristic(const Subproblem& subproblem,
                              const PricingConfig& config,
                              std::uint64_t restart_seed) {
  PricingResult result;
  int k = subproblem.size();
  if (k == 0) return result;

  std::vector<std::vector<int>> seeds;
  std::vector<int> by_lambda;
  for (int i = 0; i < k; ++i) {
    if (subproblem.lambda(i) < 0.0) by_lambda.push_back(i);
  }
  std::sort(by_lambda.begin(), by_lambda.end(), [&](int a, int b) {
    double la = subproblem.lambda(a), lb = subproblem.lambda(b);
    return la != lb ? la < lb : a < b;
  });
  for (int i = 0;
       i < config.restarts && i < static_cast<int>(by_lambda.size()); ++i) {
    seeds.push_back({by_lambda[static_cast<std::size_t>(i)]});
  }
  // One pair-grown seed from the most attractive feasible pair.
  int bi = -1, bj = -1;
  double best_w = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (subproblem.conflict(i, j)) continue;
      double w = subproblem.weight(i, j);
      if (w < best_w) { best_w = w; bi = i; bj = j; }
    }
  }
  if (bi >= 0) {
    seeds.push_back({bi, bj});
  } else if (!by_lambda.empty()) {
    seeds.push_back({by_lambda[0]});
  }
  // Top up with rng singletons when dual-negative seeds run short.
  std::uint64_t state = restart_seed;
  int guard = 0;
  while (static_cast<int>(seeds.size()) < config.restarts + 1 && guard++ < 16) {
    state = splitmix64(state);
    int i = static_cast<int>(state % static_cast<std::uint64_t>(k));
    bool dup = false;
    for (const auto& s : seeds) dup = dup || (s.size() == 1 && s[0] == i);
    if (!dup) seeds.push_back({i});
  }

  FlipSearch search(subproblem);
  std::vector<int> chosen, best_chosen;
  double best_value = 0.0;
  for (const auto& seed : seeds) {
    search.improve(seed, &chosen);
    if (chosen.empty()) continue;
    double value = subproblem.objective(chosen);
    if (value < best_value) {
      best_value = value;
      best_chosen = chosen;
    }
  }
  if (best_chosen.empty()) return result;
  result.reduced_cost = best_value;
  result.column = subproblem.to_column(best_chosen);
  return result;
}

PricingContext::PricingContext(const Instance& instance)
    : ranking(rank(instance)),
      neighborhoods(nondominated_neighborhoods(instance, ranking)) {}

namespace {

PricingResult price_one(const Instance& instance,
                        const std::vector<ObservationId>& nodes,
                        const std::vector<double>& lambda,
                        const PricingConfig& config, int iteration,
                        std::size_t index, bool exact) {
  Subproblem subproblem(instance, nodes, lambda);
  if (exact) return price_exact(subproblem, config.exact_node_limit);
  return price_heuristic(
      subproblem, config,
      mix_seed(config.seed, static_cast<std::uint64_t>(iteration), index));
}

}  // namespace

PricingOutcome price_all(const Instance& instance,
                         const PricingContext& context,
                         const std::vector<double>& lambda,
                         const PricingConfig& config, int iteration,
                         bool verify_pass) {
  PricingOutcome outcome;
  bool exact = verify_pass || config.strategy == PricingStrategy::kExact;
  std::vector<std::pair<std::size_t, Column>> found;

  if (config.threads > 1) {
    std::atomic<std::size_t> next{0};
    std::atomic<int> hits{0};
    std::atomic<bool> skipped{false};
    std::mutex sink;
    std::exception_ptr failure;
    auto worker = [&]() {
      while (true) {
        if (hits.load() >= config.max_new_columns) return;
        std::size_t idx = next.fetch_add(1);
        if (idx >= context.neighborhoods.size()) return;
        const auto& nodes = context.neighborhoods[idx];
        if (verify_pass &&
            static_cast<int>(nodes.size()) > config.exact_node_limit) {
          skipped.store(true);
          continue;
        }
        try {
          PricingResult result = price_one(instance, nodes, lambda, config,
                                           iteration, idx, exact);
          if (result.column &&
              result.reduced_cost < -config.rc_tolerance) {
            std::lock_guard<std::mutex> lock(sink);
            found.push_back({idx, std::move(*result.column)});
            hits.fetch_add(1);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(sink);
          if (!failure) failure = std::current_exception();
          hits.store(config.max_new_columns);  // stop the other workers
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < config.threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    outcome.skipped_oversized = skipped.load();
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  } else {
    for (std::size_t idx = 0; idx < context.neighborhoods.size(); ++idx) {
      if (static_cast<int>(found.size()) >= config.max_new_columns) break;
      const auto& nodes = context.neighborhoods[idx];
      if (verify_pass &&
          static_cast<int>(nodes.size()) > config.exact_node_limit) {
        outcome.skipped_oversized = true;
        continue;
      }
      PricingResult result =
          price_one(instance, nodes, lambda, config, iteration, idx, exact);
      if (result.column && result.reduced_cost < -config.rc_tolerance) {
        found.push_back({idx, std::move(*result.column)});
      }
    }
  }

  std::set<std::vector<ObservationId>> seen;
  for (auto& [idx, column] : found) {
    (void)idx;
    if (static_cast<int>(outcome.columns.size()) >= config.max_new_columns) {
      break;
    }
    if (seen.insert(column.members).second) {
      outcome.columns.push_back(std::move(column));
    }
  }
  return outcome;
}

std::vector<Column> price_all(const Instance& instance,
                              const std::vector<double>& lambda,
                              const PricingConfig& config) {
  PricingContext context(instance);
  return price_all(instance, context, lambda, config).columns;
}

}  // namespace mwsp
