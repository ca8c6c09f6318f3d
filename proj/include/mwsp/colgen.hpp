#pragma once

#include <vector>

#include "mwsp/core.hpp"
#include "mwsp/master.hpp"
#include "mwsp/pricing.hpp"

namespace mwsp {

struct CgConfig {
  DoiConfig doi;
  PricingConfig pricing;
  double rc_tolerance = 1e-9;
  int max_iterations = 10000;
};

struct IterationStat {
  int iteration = 0;
  double objective = 0.0;
  int pool_size = 0;
  int new_columns = 0;
  double pricing_seconds = 0.0;
};

struct CgResult {
  double lp_objective = 0.0;
  int iterations = 0;             // RMP solves performed
  long columns_generated = 0;
  bool exact_verified = false;    // terminal pass covered every neighborhood
  std::vector<IterationStat> stats;
  ColumnPool pool;
  RmpSolution terminal;           // solution of the last RMP
};

// Alternates master solves with pricing sweeps until no negative-reduced-cost
// column remains; heuristic strategies finish with an exact verification pass
// bounded by the exact node limit. Throws MaxIterationsError.
CgResult run_cg(const Instance& instance, const CgConfig& config);

// The final clusters: disjoint, covering every observation (unpacked ones as
// singletons), with total cost summed over the non-singleton clusters.
struct Clustering {
  std::vector<std::vector<ObservationId>> clusters;
  double total_cost = 0.0;
};

// Solves the set-packing ILP over the generated pool: directly when the
// terminal LP is already integral, otherwise by branch-and-bound on the
// gamma variables (in the flexible formulation when that mode is active,
// followed by overlap repair).
Clustering integerize(const Instance& instance, const ColumnPool& pool,
                      const DoiConfig& config);

// While some observation is covered twice, removes it from whichever covering
// cluster keeps the total cost lowest. Clusters shrunk to one member stay as
// singletons; emptied ones vanish.
std::vector<std::vector<ObservationId>> repair_overlaps(
    const Instance& instance, std::vector<std::vector<ObservationId>> selected);

// Packs the selected member sets into a full clustering over the instance.
Clustering finish_clustering(const Instance& instance,
                             std::vector<std::vector<ObservationId>> selected);

}  // namespace mwsp
