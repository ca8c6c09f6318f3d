#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace mwsp::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Centralized tolerances. Feasibility is checked at 1e-9, complementary
// slackness certified at 1e-7, strong duality at 1e-6.
struct Tolerances {
  static constexpr double feasibility = 1e-9;
  static constexpr double dual = 1e-9;
  static constexpr double slackness = 1e-7;
  static constexpr double duality_gap = 1e-6;
};

// min c.x  s.t.  a.x <= b per row,  lower <= x <= upper.
// Lower bounds must be finite (every variable here is bounded below, usually
// by 0); upper bounds may be +inf.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, double>> coeffs;
    double rhs = 0.0;
  };

  int num_vars = 0;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Row> rows;

  int add_variable(double cost, double lo = 0.0, double hi = kInf);
  void add_row(std::vector<std::pair<int, double>> coeffs, double rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  std::vector<double> primal;     // per variable
  std::vector<double> row_duals;  // per row; <= 0 for <=-rows of a min problem
};

// Simplex basis in a representation stable under appending variables:
// structural variable j is encoded as j, the slack of row i as -1 - i.
struct Basis {
  std::vector<int> basic;      // one encoded entry per row
  std::vector<int> at_upper;   // structural variables resting at their upper bound
};

struct SimplexOptions {
  std::int64_t max_pivots = 1'000'000;
};

// Deterministic bounded-variable revised simplex with a dense basis inverse,
// Dantzig pricing and a Bland fallback under stalling. When `warm` is given,
// the solve resumes from that basis if it is still valid for this program and
// writes the final basis back on success.
LpSolution solve(const LinearProgram& lp, const SimplexOptions& options = {},
                 Basis* warm = nullptr);

// Residuals used to certify a solve; all near zero for a correct optimum.
struct Certificate {
  double primal_infeasibility = 0.0;  // rows and bounds
  double dual_infeasibility = 0.0;    // sign conditions on duals/reduced costs
  double slackness = 0.0;             // max |y_i (b_i - a_i.x)|
  double duality_gap = 0.0;           // |primal obj - dual obj|
};

Certificate certify(const LinearProgram& lp, const LpSolution& solution);

}  // namespace mwsp::lp
