#pragma once

#include <span>
#include <vector>

#include "mwsp/core.hpp"
#include "mwsp/lp.hpp"

namespace mwsp {

enum class DoiMode { kNone, kVarying, kFlexible };

struct DoiConfig {
  DoiMode mode = DoiMode::kNone;
  int thresholds = 5;      // K: rungs kept per observation besides the largest
  double epsilon = 1e-6;   // the tiny positive slack added to every bound
};

// The generated columns, deduplicated by member set. Every stored column is
// feasible and carries its cached cost and per-member removal bounds.
class ColumnPool {
 public:
  explicit ColumnPool(double epsilon) : epsilon_(epsilon) {}

  // Adds the given columns, skipping member sets already present. Costs and
  // removal bounds are (re)computed here. Throws InfeasibleColumnError when a
  // column contains a blocked pair. Returns the number of new columns.
  int add(const Instance& instance, std::span<const Column> columns);
  int add(const Instance& instance, const Column& column) {
    return add(instance, std::span<const Column>(&column, 1));
  }

  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  const Column& operator[](std::size_t i) const { return columns_[i]; }
  const std::vector<Column>& columns() const { return columns_; }
  double epsilon() const { return epsilon_; }
  bool contains(const std::vector<ObservationId>& members) const;

 private:
  double epsilon_;
  std::vector<Column> columns_;
  std::vector<std::vector<ObservationId>> index_;  // sorted member lists
};

// Per-member removal bound: epsilon + max(0, -sum_d1 theta(d,d1) * (1 + [theta < 0])).
// Over-covering an observation d of column g by one extra unit can never gain
// more than this, whatever other members have been dropped. Returned values
// align with the (sorted) members span.
std::vector<double> compute_xi_dg(const Instance& instance,
                                  std::span<const ObservationId> members,
                                  double epsilon);

// Pooled worst case over all generated columns: Xi_d = epsilon + max_g
// (Xi_dg - epsilon); epsilon for observations in no column. Grows
// monotonically as the pool grows.
std::vector<double> compute_varying_xi(const ColumnPool& pool,
                                       ObservationId n_observations,
                                       double epsilon);

// Sorted unique removal bounds of one observation over the pool, with the
// subsample actually used to build RMP rows.
struct ThresholdLadder {
  std::vector<double> omega;       // ascending unique positive bounds
  std::vector<double> increments;  // increments[z] = omega[z] - omega[z-1]
  std::vector<int> selected;       // kept rung indices; the last rung always
};

// Selected rungs are ceil(k*L/(K+1)) for k = 1..K+1, deduplicated, so at most
// K+1 rungs survive and the largest always does.
std::vector<ThresholdLadder> build_ladders(const ColumnPool& pool,
                                           const DoiConfig& config,
                                           ObservationId n_observations);

// Smallest selected rung value >= xi; equals xi when xi sits on a kept rung.
double rounded_bound(const ThresholdLadder& ladder, double xi);

// A built restricted master problem plus the layout needed to read the
// solution back. gamma variables start at gamma_offset; any xi variables
// occupy [0, gamma_offset).
struct RmpModel {
  lp::LinearProgram lp;
  int gamma_offset = 0;
  int pool_size = 0;
  struct RungRow {
    ObservationId obs;
    int rung;          // index into the ladder of obs
    double increment;  // objective cost of the matching xi variable
  };
  std::vector<RungRow> rung_rows;  // flexible mode; aligns with lp.rows
};

// mode none:     min sum Gamma_g gamma_g        s.t. sum_{g ni d} gamma_g <= 1
// mode varying:  adds xi_d >= 0 with cost Xi_d and coefficient -1 in row d
// mode flexible: one row per (d, kept rung) with indicator coefficients from
//                the rounded bounds, and xi_dz variables priced at the rung
//                increments
RmpModel build_rmp(const Instance& instance, const ColumnPool& pool,
                   const DoiConfig& config,
                   const std::vector<ThresholdLadder>* ladders = nullptr);

// Duals of the RMP translated back to observations. lambda is the aggregate
// per-observation dual (flexible mode sums its rung duals), clamped to <= 0
// for pricing.
struct DualSolution {
  std::vector<double> lambda;
  std::vector<std::vector<double>> lambda_dz;  // flexible; aligns with ladder.selected
};

struct RmpSolution {
  double objective = 0.0;
  std::vector<double> gamma;               // per pool column
  std::vector<double> xi_d;                // varying mode
  std::vector<std::vector<double>> xi_dz;  // flexible mode; aligns with ladder.selected
  DualSolution duals;
};

// One-shot build + solve; used by tests and the integerizer.
RmpSolution solve_rmp(const Instance& instance, const ColumnPool& pool,
                      const DoiConfig& config);

// Holds the pool and the evolving RMP across column-generation iterations,
// reusing the previous simplex basis whenever the row structure lets it.
class Master {
 public:
  Master(const Instance& instance, const DoiConfig& config);

  int add_columns(std::span<const Column> columns);
  RmpSolution solve();

  const Instance& instance() const { return *instance_; }
  const ColumnPool& pool() const { return pool_; }
  const DoiConfig& config() const { return config_; }
  // Ladders backing the most recent flexible-mode solve.
  const std::vector<ThresholdLadder>& ladders();

 private:
  void rebuild();
  void append_new_columns();

  const Instance* instance_;
  DoiConfig config_;
  ColumnPool pool_;
  RmpModel model_;
  bool model_valid_ = false;
  int cols_in_model_ = 0;
  lp::Basis basis_;
  bool basis_valid_ = false;
  std::vector<ThresholdLadder> ladders_;
  bool ladders_valid_ = false;
};

}  // namespace mwsp
