#include "mwsp/colgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mwsp/errors.hpp"
#include "mwsp/lp.hpp"

namespace mwsp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

CgResult run_cg(const Instance& instance, const CgConfig& config) {
  Master master(instance, config.doi);
  PricingContext context(instance);
  PricingConfig pricing = config.pricing;
  pricing.rc_tolerance = config.rc_tolerance;
  bool heuristic = pricing.strategy != PricingStrategy::kExact;

  CgResult result{.pool = ColumnPool(config.doi.epsilon)};
  bool skipped_oversized = false;
  int iteration = 0;
  while (true) {
    if (iteration >= config.max_iterations) {
      throw MaxIterationsError("column generation exceeded max iterations");
    }
    RmpSolution rmp = master.solve();
    auto t0 = std::chrono::steady_clock::now();
    PricingOutcome out = price_all(instance, context, rmp.duals.lambda,
                                   pricing, iteration, /*verify_pass=*/false);
    if (out.columns.empty() && heuristic) {
      // Heuristic pricing found nothing; certify with exact pricing on every
      // neighborhood the node limit allows.
      out = price_all(instance, context, rmp.duals.lambda, pricing, iteration,
                      /*verify_pass=*/true);
      skipped_oversized = skipped_oversized || out.skipped_oversized;
    }
    double pricing_seconds = seconds_since(t0);

    int added = 0;
    if (!out.columns.empty()) {
      added = master.add_columns(out.columns);
    }
    result.stats.push_back(IterationStat{iteration, rmp.objective,
                                         static_cast<int>(master.pool().size()),
                                         added, pricing_seconds});
    ++iteration;
    result.columns_generated += added;
    if (out.columns.empty() || added == 0) {
      // added == 0 with nonempty pricing output would mean pricing re-found
      // pool columns; both cases end the loop with the current RMP optimal.
      result.lp_objective = rmp.objective;
      result.terminal = std::move(rmp);
      break;
    }
  }
  result.iterations = iteration;
  result.exact_verified = !skipped_oversized;
  result.pool = master.pool();
  return result;
}

namespace {

// Branch-and-bound over the pool's gamma variables, bounding each node with
// the LP relaxation. Returns the selected pool indices of the best binary
// solution (by model objective, xi penalties included in flexible mode).
struct BnbResult {
  std::vector<std::size_t> selected;
  bool found = false;
};

class PoolBnb {
 public:
  PoolBnb(RmpModel model) : model_(std::move(model)) {
    for (int g = 0; g < model_.pool_size; ++g) {
      int var = model_.gamma_offset + g;
      model_.lp.upper[static_cast<std::size_t>(var)] = 1.0;
    }
  }

  BnbResult run() {
    dive();
    BnbResult out;
    out.found = found_;
    out.selected = best_selection_;
    return out;
  }

 private:
  static constexpr double kIntTol = 1e-7;

  void dive() {
    lp::LpSolution sol = lp::solve(model_.lp);
    if (sol.status == lp::LpStatus::kInfeasible) return;
    if (sol.status != lp::LpStatus::kOptimal) {
      throw Error("integerization node solve failed");
    }
    if (found_ && sol.objective >= best_value_ - 1e-9) return;
    // Branch on the most fractional gamma, lowest index on ties.
    int branch_var = -1;
    double best_dist = 0.0;
    for (int g = 0; g < model_.pool_size; ++g) {
      double v = sol.primal[static_cast<std::size_t>(model_.gamma_offset + g)];
      if (std::min(v, 1.0 - v) <= kIntTol) continue;
      double dist = std::fabs(v - 0.5);
      if (branch_var < 0 || dist < best_dist - 1e-12) {
        branch_var = g;
        best_dist = dist;
      }
    }
    if (branch_var < 0) {
      if (!found_ || sol.objective < best_value_ - 1e-12) {
        found_ = true;
        best_value_ = sol.objective;
        best_selection_.clear();
        for (int g = 0; g < model_.pool_size; ++g) {
          if (sol.primal[static_cast<std::size_t>(model_.gamma_offset + g)] >
              0.5) {
            best_selection_.push_back(static_cast<std::size_t>(g));
          }
        }
      }
      return;
    }
    int var = model_.gamma_offset + branch_var;
    double frac = sol.primal[static_cast<std::size_t>(var)];
    double save_lo = model_.lp.lower[static_cast<std::size_t>(var)];
    double save_hi = model_.lp.upper[static_cast<std::size_t>(var)];
    bool one_first = frac >= 0.5;
    for (int pass = 0; pass < 2; ++pass) {
      bool fix_one = (pass == 0) == one_first;
      if (fix_one) {
        model_.lp.lower[static_cast<std::size_t>(var)] = 1.0;
        model_.lp.upper[static_cast<std::size_t>(var)] = 1.0;
      } else {
        model_.lp.lower[static_cast<std::size_t>(var)] = 0.0;
        model_.lp.upper[static_cast<std::size_t>(var)] = 0.0;
      }
      dive();
      model_.lp.lower[static_cast<std::size_t>(var)] = save_lo;
      model_.lp.upper[static_cast<std::size_t>(var)] = save_hi;
    }
  }

  RmpModel model_;
  bool found_ = false;
  double best_value_ = 0.0;
  std::vector<std::size_t> best_selection_;
};

}  // namespace

std::vector<std::vector<ObservationId>> repair_overlaps(
    const Instance& instance,
    std::vector<std::vector<ObservationId>> selected) {
  auto n = static_cast<std::size_t>(instance.n_observations());
  while (true) {
    std::vector<int> coverage(n, 0);
    for (const auto& members : selected) {
      for (ObservationId d : members) ++coverage[static_cast<std::size_t>(d)];
    }
    ObservationId overlapped = -1;
    for (std::size_t d = 0; d < n; ++d) {
      if (coverage[d] > 1) {
        overlapped = static_cast<ObservationId>(d);
        break;
      }
    }
    if (overlapped < 0) break;
    // Evaluate removing the observation from each covering cluster; keep the
    // removal that leaves the lowest combined cost over the coverers.
    std::vector<std::size_t> coverers;
    for (std::size_t s = 0; s < selected.size(); ++s) {
      if (std::binary_search(selected[s].begin(), selected[s].end(),
                             overlapped)) {
        coverers.push_back(s);
      }
    }
    double base = 0.0;
    for (std::size_t s : coverers) {
      base += hypothesis_cost(instance, selected[s]).value();
    }
    std::size_t best_removal = coverers.front();
    double best_total = 0.0;
    bool first = true;
    for (std::size_t s : coverers) {
      std::vector<ObservationId> pruned;
      pruned.reserve(selected[s].size() - 1);
      for (ObservationId d : selected[s]) {
        if (d != overlapped) pruned.push_back(d);
      }
      double total = base - hypothesis_cost(instance, selected[s]).value() +
                     hypothesis_cost(instance, pruned).value();
      if (first || total < best_total - 1e-12) {
        first = false;
        best_total = total;
        best_removal = s;
      }
    }
    auto& edited = selected[best_removal];
    edited.erase(std::remove(edited.begin(), edited.end(), overlapped),
                 edited.end());
    if (edited.empty()) {
      selected.erase(selected.begin() + static_cast<long>(best_removal));
    }
  }
  return selected;
}

Clustering finish_clustering(const Instance& instance,
                             std::vector<std::vector<ObservationId>> selected) {
  auto n = static_cast<std::size_t>(instance.n_observations());
  Clustering clustering;
  std::vector<bool> covered(n, false);
  for (auto& members : selected) {
    if (members.empty()) continue;
    for (ObservationId d : members) covered[static_cast<std::size_t>(d)] = true;
    if (members.size() >= 2) {
      clustering.total_cost += hypothesis_cost(instance, members).value();
    }
    clustering.clusters.push_back(std::move(members));
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (!covered[d]) {
      clustering.clusters.push_back({static_cast<ObservationId>(d)});
    }
  }
  std::sort(clustering.clusters.begin(), clustering.clusters.end());
  return clustering;
}

Clustering integerize(const Instance& instance, const ColumnPool& pool,
                      const DoiConfig& config) {
  RmpSolution rmp = solve_rmp(instance, pool, config);
  bool integral = true;
  for (double g : rmp.gamma) {
    if (std::min(g, 1.0 - g) > 1e-7) {
      integral = false;
      break;
    }
  }
  std::vector<std::size_t> selection;
  if (integral) {
    for (std::size_t g = 0; g < rmp.gamma.size(); ++g) {
      if (rmp.gamma[g] > 0.5) selection.push_back(g);
    }
  } else {
    // The flexible formulation keeps its xi variables (overlaps allowed at a
    // penalty, repaired below); the other modes solve the plain packing ILP.
    DoiConfig ilp_config = config;
    if (config.mode == DoiMode::kVarying) ilp_config.mode = DoiMode::kNone;
    RmpModel model = build_rmp(instance, pool, ilp_config);
    PoolBnb bnb(std::move(model));
    BnbResult result = bnb.run();
    if (!result.found) throw Error("integerization found no binary solution");
    selection = std::move(result.selected);
  }
  std::vector<std::vector<ObservationId>> members;
  members.reserve(selection.size());
  for (std::size_t g : selection) members.push_back(pool[g].members);
  members = repair_overlaps(instance, std::move(members));
  return finish_clustering(instance, std::move(members));
}

}  // namespace mwsp
