#include "mwsp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mwsp::lp {

int LinearProgram::add_variable(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  return num_vars++;
}

void LinearProgram::add_row(std::vector<std::pair<int, double>> coeffs,
                            double rhs) {
  rows.push_back(Row{std::move(coeffs), rhs});
}

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kRatioTieTol = 1e-12;
constexpr int kRefactorEvery = 256;
constexpr int kStallLimit = 64;

enum class VStat : std::uint8_t { kBasic, kAtLower, kAtUpper };

void validate(const LinearProgram& lp) {
  if (lp.num_vars < 0 ||
      lp.objective.size() != static_cast<std::size_t>(lp.num_vars) ||
      lp.lower.size() != static_cast<std::size_t>(lp.num_vars) ||
      lp.upper.size() != static_cast<std::size_t>(lp.num_vars)) {
    throw std::invalid_argument("linear program: inconsistent sizes");
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!std::isfinite(lp.objective[static_cast<std::size_t>(j)])) {
      throw std::invalid_argument("linear program: non-finite objective");
    }
    double lo = lp.lower[static_cast<std::size_t>(j)];
    double hi = lp.upper[static_cast<std::size_t>(j)];
    if (!std::isfinite(lo) || std::isnan(hi) || lo > hi) {
      throw std::invalid_argument("linear program: bad variable bounds");
    }
  }
  for (const auto& row : lp.rows) {
    if (!std::isfinite(row.rhs)) {
      throw std::invalid_argument("linear program: non-finite rhs");
    }
    for (const auto& [j, a] : row.coeffs) {
      if (j < 0 || j >= lp.num_vars || !std::isfinite(a)) {
        throw std::invalid_argument("linear program: bad row coefficient");
      }
    }
  }
}

// Bounded-variable primal simplex over A x + s = b with a dense basis
// inverse. Variable order: structurals, then slacks, then any phase-1
// artificials.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SimplexOptions& options)
      : lp_(lp), options_(options), m_(static_cast<int>(lp.rows.size())),
        n_(lp.num_vars) {
    cols_.resize(static_cast<std::size_t>(n_ + m_));
    cost_.assign(static_cast<std::size_t>(n_ + m_), 0.0);
    lo_.assign(static_cast<std::size_t>(n_ + m_), 0.0);
    hi_.assign(static_cast<std::size_t>(n_ + m_), kInf);
    for (int j = 0; j < n_; ++j) {
      cost_[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)];
      lo_[static_cast<std::size_t>(j)] = lp.lower[static_cast<std::size_t>(j)];
      hi_[static_cast<std::size_t>(j)] = lp.upper[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < m_; ++i) {
      for (const auto& [j, a] : lp.rows[static_cast<std::size_t>(i)].coeffs) {
        if (a != 0.0) cols_[static_cast<std::size_t>(j)].push_back({i, a});
      }
      cols_[static_cast<std::size_t>(n_ + i)].push_back({i, 1.0});
    }
  }

  LpSolution run(Basis* warm) {
    if (!init_from_warm(warm)) init_cold();
    compute_basic_values();
    if (!basics_feasible()) {
      if (warm != nullptr) {
        // A stale warm basis is not worth repairing; restart cold.
        init_cold();
        compute_basic_values();
      }
      if (!basics_feasible()) {
        LpStatus phase1 = solve_phase1();
        if (phase1 != LpStatus::kOptimal) return make_failed(phase1);
      }
    }
    LpStatus status = iterate();
    if (status != LpStatus::kOptimal) return make_failed(status);
    return extract(warm);
  }

 private:
  std::size_t idx(int i, int k) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(k);
  }
  int total_vars() const { return static_cast<int>(cols_.size()); }

  void init_cold() {
    vstat_.assign(static_cast<std::size_t>(total_vars()), VStat::kAtLower);
    basic_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      basic_[static_cast<std::size_t>(i)] = n_ + i;
      vstat_[static_cast<std::size_t>(n_ + i)] = VStat::kBasic;
    }
    binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) binv_[idx(i, i)] = 1.0;
  }

  bool init_from_warm(const Basis* warm) {
    if (warm == nullptr || warm->basic.size() != static_cast<std::size_t>(m_)) {
      return false;
    }
    std::vector<int> decoded;
    decoded.reserve(warm->basic.size());
    std::vector<bool> seen(static_cast<std::size_t>(total_vars()), false);
    for (int enc : warm->basic) {
      int v = enc >= 0 ? enc : n_ + (-1 - enc);
      if (enc >= n_ || v < 0 || v >= total_vars() || seen[static_cast<std::size_t>(v)]) {
        return false;
      }
      seen[static_cast<std::size_t>(v)] = true;
      decoded.push_back(v);
    }
    vstat_.assign(static_cast<std::size_t>(total_vars()), VStat::kAtLower);
    for (int j : warm->at_upper) {
      if (j < 0 || j >= n_ || seen[static_cast<std::size_t>(j)] ||
          !std::isfinite(hi_[static_cast<std::size_t>(j)])) {
        return false;
      }
      vstat_[static_cast<std::size_t>(j)] = VStat::kAtUpper;
    }
    basic_ = decoded;
    for (int v : basic_) vstat_[static_cast<std::size_t>(v)] = VStat::kBasic;
    return refactor();
  }

  // Rebuilds binv_ from the current basis by Gauss-Jordan with partial
  // pivoting. Returns false when the basis matrix is singular.
  bool refactor() {
    std::vector<double> mat(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
    for (int k = 0; k < m_; ++k) {
      for (const auto& [i, a] : cols_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])]) {
        mat[idx(i, k)] = a;
      }
    }
    binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) binv_[idx(i, i)] = 1.0;
    for (int c = 0; c < m_; ++c) {
      int piv = -1;
      double best = 1e-12;
      for (int r = c; r < m_; ++r) {
        double v = std::fabs(mat[idx(r, c)]);
        if (v > best) { best = v; piv = r; }
      }
      if (piv < 0) return false;
      if (piv != c) {
        for (int k = 0; k < m_; ++k) {
          std::swap(mat[idx(piv, k)], mat[idx(c, k)]);
          std::swap(binv_[idx(piv, k)], binv_[idx(c, k)]);
        }
      }
      double inv = 1.0 / mat[idx(c, c)];
      for (int k = 0; k < m_; ++k) {
        mat[idx(c, k)] *= inv;
        binv_[idx(c, k)] *= inv;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        double f = mat[idx(r, c)];
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          mat[idx(r, k)] -= f * mat[idx(c, k)];
          binv_[idx(r, k)] -= f * binv_[idx(c, k)];
        }
      }
    }
    return true;
  }

  double nonbasic_value(int j) const {
    return vstat_[static_cast<std::size_t>(j)] == VStat::kAtUpper
               ? hi_[static_cast<std::size_t>(j)]
               : lo_[static_cast<std::size_t>(j)];
  }

  // xb = binv (b - sum over nonbasic j of A_j x_j)
  void compute_basic_values() {
    std::vector<double> rhs(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      rhs[static_cast<std::size_t>(i)] = lp_.rows[static_cast<std::size_t>(i)].rhs;
    }
    for (int j = 0; j < total_vars(); ++j) {
      if (vstat_[static_cast<std::size_t>(j)] == VStat::kBasic) continue;
      double xj = nonbasic_value(j);
      if (xj == 0.0) continue;
      for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
        rhs[static_cast<std::size_t>(i)] -= a * xj;
      }
    }
    xb_.assign(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (int k = 0; k < m_; ++k) s += binv_[idx(i, k)] * rhs[static_cast<std::size_t>(k)];
      xb_[static_cast<std::size_t>(i)] = s;
    }
  }

  bool basics_feasible() const {
    for (int i = 0; i < m_; ++i) {
      int v = basic_[static_cast<std::size_t>(i)];
      double x = xb_[static_cast<std::size_t>(i)];
      if (x < lo_[static_cast<std::size_t>(v)] - Tolerances::feasibility ||
          x > hi_[static_cast<std::size_t>(v)] + Tolerances::feasibility) {
        return false;
      }
    }
    return true;
  }

  // Replaces each infeasible basic slack by an artificial with a -1 column,
  // minimizes the sum of artificials, then pivots surviving artificials out.
  LpStatus solve_phase1() {
    init_cold();
    compute_basic_values();
    int first_artificial = total_vars();
    for (int i = 0; i < m_; ++i) {
      if (xb_[static_cast<std::size_t>(i)] >= -Tolerances::feasibility) continue;
      int z = total_vars();
      cols_.push_back({{i, -1.0}});
      cost_.push_back(0.0);
      lo_.push_back(0.0);
      hi_.push_back(kInf);
      vstat_.push_back(VStat::kBasic);
      vstat_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] = VStat::kAtLower;
      basic_[static_cast<std::size_t>(i)] = z;
      binv_[idx(i, i)] = -1.0;
      xb_[static_cast<std::size_t>(i)] = -xb_[static_cast<std::size_t>(i)];
    }
    std::vector<double> real_cost = cost_;
    for (std::size_t j = 0; j < cost_.size(); ++j) cost_[j] = 0.0;
    for (int j = first_artificial; j < total_vars(); ++j) {
      cost_[static_cast<std::size_t>(j)] = 1.0;
    }
    LpStatus status = iterate();
    if (status == LpStatus::kIterationLimit) return status;
    double infeas = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basic_[static_cast<std::size_t>(i)] >= first_artificial) {
        infeas += xb_[static_cast<std::size_t>(i)];
      }
    }
    if (infeas > 1e-7) return LpStatus::kInfeasible;
    drive_out_artificials(first_artificial);
    cost_ = real_cost;
    // Artificials must never re-enter.
    for (int j = first_artificial; j < total_vars(); ++j) {
      hi_[static_cast<std::size_t>(j)] = 0.0;
    }
    if (!refactor()) return LpStatus::kIterationLimit;
    compute_basic_values();
    return LpStatus::kOptimal;
  }

  void drive_out_artificials(int first_artificial) {
    for (int r = 0; r < m_; ++r) {
      if (basic_[static_cast<std::size_t>(r)] < first_artificial) continue;
      int enter = -1;
      double best = 1e-7;
      for (int j = 0; j < first_artificial; ++j) {
        if (vstat_[static_cast<std::size_t>(j)] == VStat::kBasic) continue;
        double w = 0.0;
        for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
          w += binv_[idx(r, i)] * a;
        }
        if (std::fabs(w) > best) { best = std::fabs(w); enter = j; }
      }
      if (enter < 0) continue;  // redundant row; artificial stays basic at 0
      std::vector<double> w = ftran(enter);
      pivot(enter, r, w);
      vstat_[static_cast<std::size_t>(enter)] = VStat::kBasic;
      // The leaving artificial rests at 0.
      xb_[static_cast<std::size_t>(r)] = nonbasic_value(enter);
      compute_basic_values();
    }
  }

  std::vector<double> ftran(int j) const {
    std::vector<double> w(static_cast<std::size_t>(m_), 0.0);
    for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
      for (int r = 0; r < m_; ++r) {
        w[static_cast<std::size_t>(r)] += binv_[idx(r, i)] * a;
      }
    }
    return w;
  }

  void compute_duals(std::vector<double>& y) const {
    y.assign(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      double cb = cost_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      for (int k = 0; k < m_; ++k) {
        y[static_cast<std::size_t>(k)] += cb * binv_[idx(i, k)];
      }
    }
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double rc = cost_[static_cast<std::size_t>(j)];
    for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
      rc -= y[static_cast<std::size_t>(i)] * a;
    }
    return rc;
  }

  void pivot(int enter, int leave_row, const std::vector<double>& w) {
    double piv = w[static_cast<std::size_t>(leave_row)];
    double inv = 1.0 / piv;
    for (int k = 0; k < m_; ++k) binv_[idx(leave_row, k)] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave_row) continue;
      double f = w[static_cast<std::size_t>(i)];
      if (f == 0.0) continue;
      for (int k = 0; k < m_; ++k) {
        binv_[idx(i, k)] -= f * binv_[idx(leave_row, k)];
      }
    }
    basic_[static_cast<std::size_t>(leave_row)] = enter;
  }

  LpStatus iterate() {
    std::vector<double> y;
    bool bland = false;
    bool clean = true;  // binv freshly factored and no pending confirmation
    int stall = 0;
    int since_refactor = 0;
    while (true) {
      if (pivots_ >= options_.max_pivots) return LpStatus::kIterationLimit;
      compute_duals(y);
      int enter = -1;
      int dir = 1;
      double best_score = Tolerances::dual;
      for (int j = 0; j < total_vars(); ++j) {
        VStat s = vstat_[static_cast<std::size_t>(j)];
        if (s == VStat::kBasic) continue;
        if (lo_[static_cast<std::size_t>(j)] == hi_[static_cast<std::size_t>(j)]) continue;
        double rc = reduced_cost(j, y);
        double score = 0.0;
        int d = 0;
        if (s == VStat::kAtLower && rc < -Tolerances::dual) {
          score = -rc;
          d = 1;
        } else if (s == VStat::kAtUpper && rc > Tolerances::dual) {
          score = rc;
          d = -1;
        } else {
          continue;
        }
        if (bland) { enter = j; dir = d; break; }
        if (score > best_score) { best_score = score; enter = j; dir = d; }
      }
      if (enter < 0) {
        if (clean) return LpStatus::kOptimal;
        // Confirm optimality against a fresh factorization.
        if (!refactor()) return LpStatus::kIterationLimit;
        compute_basic_values();
        clean = true;
        since_refactor = 0;
        continue;
      }

      std::vector<double> w = ftran(enter);
      double bound_gap = hi_[static_cast<std::size_t>(enter)] - lo_[static_cast<std::size_t>(enter)];
      double t_min = bound_gap;  // may be +inf
      int leave_row = -1;
      bool leave_to_upper = false;
      double leave_piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        double delta = -dir * w[static_cast<std::size_t>(i)];
        if (std::fabs(delta) <= kPivotTol) continue;
        int v = basic_[static_cast<std::size_t>(i)];
        double t;
        bool to_upper;
        if (delta < 0.0) {
          t = (xb_[static_cast<std::size_t>(i)] - lo_[static_cast<std::size_t>(v)]) / (-delta);
          to_upper = false;
        } else {
          double hv = hi_[static_cast<std::size_t>(v)];
          if (!std::isfinite(hv)) continue;
          t = (hv - xb_[static_cast<std::size_t>(i)]) / delta;
          to_upper = true;
        }
        if (t < 0.0) t = 0.0;
        bool take;
        if (leave_row < 0 && t < t_min - kRatioTieTol) {
          take = true;
        } else if (t < t_min - kRatioTieTol) {
          take = true;
        } else if (leave_row >= 0 && t <= t_min + kRatioTieTol) {
          // Tie break: Bland wants the smallest variable index; otherwise
          // prefer the larger pivot for stability, then the smaller index.
          if (bland) {
            take = v < basic_[static_cast<std::size_t>(leave_row)];
          } else {
            double cur = std::fabs(leave_piv);
            double cand = std::fabs(w[static_cast<std::size_t>(i)]);
            take = cand > cur + kRatioTieTol ||
                   (std::fabs(cand - cur) <= kRatioTieTol &&
                    v < basic_[static_cast<std::size_t>(leave_row)]);
          }
        } else {
          take = false;
        }
        if (take) {
          t_min = t;
          leave_row = i;
          leave_to_upper = to_upper;
          leave_piv = w[static_cast<std::size_t>(i)];
        }
      }
      if (leave_row < 0 && !std::isfinite(bound_gap)) return LpStatus::kUnbounded;

      // leave_row < 0 means the entering variable hits its own far bound
      // first: a bound flip with no basis change.
      double step = leave_row >= 0 ? t_min : bound_gap;
      for (int i = 0; i < m_; ++i) {
        xb_[static_cast<std::size_t>(i)] -= dir * step * w[static_cast<std::size_t>(i)];
      }
      if (leave_row < 0) {
        vstat_[static_cast<std::size_t>(enter)] =
            dir > 0 ? VStat::kAtUpper : VStat::kAtLower;
      } else {
        int leaving = basic_[static_cast<std::size_t>(leave_row)];
        double enter_value =
            (dir > 0 ? lo_[static_cast<std::size_t>(enter)]
                     : hi_[static_cast<std::size_t>(enter)]) + dir * step;
        pivot(enter, leave_row, w);
        vstat_[static_cast<std::size_t>(leaving)] =
            leave_to_upper ? VStat::kAtUpper : VStat::kAtLower;
        vstat_[static_cast<std::size_t>(enter)] = VStat::kBasic;
        xb_[static_cast<std::size_t>(leave_row)] = enter_value;
        clean = false;
        if (++since_refactor >= kRefactorEvery) {
          if (!refactor()) return LpStatus::kIterationLimit;
          compute_basic_values();
          since_refactor = 0;
        }
      }
      ++pivots_;
      if (step <= 1e-11) {
        if (++stall > kStallLimit) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  LpSolution make_failed(LpStatus status) const {
    LpSolution sol;
    sol.status = status;
    return sol;
  }

  LpSolution extract(Basis* warm) {
    // Final refresh so the reported solution comes from a clean factorization.
    if (!refactor()) return make_failed(LpStatus::kIterationLimit);
    compute_basic_values();
    LpSolution sol;
    sol.status = LpStatus::kOptimal;
    sol.primal.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) {
      sol.primal[static_cast<std::size_t>(j)] = nonbasic_value(j);
    }
    for (int i = 0; i < m_; ++i) {
      int v = basic_[static_cast<std::size_t>(i)];
      if (v < n_) sol.primal[static_cast<std::size_t>(v)] = xb_[static_cast<std::size_t>(i)];
    }
    std::vector<double> y;
    compute_duals(y);
    sol.row_duals = y;
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) {
      obj += lp_.objective[static_cast<std::size_t>(j)] * sol.primal[static_cast<std::size_t>(j)];
    }
    sol.objective = obj;
    if (warm != nullptr) {
      warm->basic.clear();
      warm->at_upper.clear();
      bool usable = true;
      for (int i = 0; i < m_; ++i) {
        int v = basic_[static_cast<std::size_t>(i)];
        if (v < n_) {
          warm->basic.push_back(v);
        } else if (v < n_ + m_) {
          warm->basic.push_back(-1 - (v - n_));
        } else {
          usable = false;  // an artificial survived on a redundant row
        }
      }
      for (int j = 0; j < n_; ++j) {
        if (vstat_[static_cast<std::size_t>(j)] == VStat::kAtUpper) {
          warm->at_upper.push_back(j);
        }
      }
      if (!usable) {
        warm->basic.clear();
        warm->at_upper.clear();
      }
    }
    return sol;
  }

  const LinearProgram& lp_;
  SimplexOptions options_;
  int m_;
  int n_;
  std::vector<std::vector<std::pair<int, double>>> cols_;
  std::vector<double> cost_, lo_, hi_;
  std::vector<int> basic_;
  std::vector<VStat> vstat_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::int64_t pivots_ = 0;
};

// With no rows every variable sits at whichever bound its cost prefers.
LpSolution solve_unconstrained(const LinearProgram& lp) {
  LpSolution sol;
  sol.primal.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
  for (int j = 0; j < lp.num_vars; ++j) {
    double c = lp.objective[static_cast<std::size_t>(j)];
    double x;
    if (c < 0.0) {
      x = lp.upper[static_cast<std::size_t>(j)];
      if (!std::isfinite(x)) {
        sol.status = LpStatus::kUnbounded;
        sol.primal.clear();
        return sol;
      }
    } else {
      x = lp.lower[static_cast<std::size_t>(j)];
    }
    sol.primal[static_cast<std::size_t>(j)] = x;
    sol.objective += c * x;
  }
  sol.status = LpStatus::kOptimal;
  return sol;
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const SimplexOptions& options,
                 Basis* warm) {
  validate(lp);
  if (lp.rows.empty()) return solve_unconstrained(lp);
  Simplex simplex(lp, options);
  return simplex.run(warm);
}

Certificate certify(const LinearProgram& lp, const LpSolution& sol) {
  Certificate cert;
  if (sol.status != LpStatus::kOptimal) return cert;
  const auto& x = sol.primal;
  const auto& y = sol.row_duals;
  for (int j = 0; j < lp.num_vars; ++j) {
    double v = x[static_cast<std::size_t>(j)];
    cert.primal_infeasibility =
        std::max({cert.primal_infeasibility,
                  lp.lower[static_cast<std::size_t>(j)] - v,
                  v - lp.upper[static_cast<std::size_t>(j)]});
  }
  std::vector<double> rc(static_cast<std::size_t>(lp.num_vars));
  for (int j = 0; j < lp.num_vars; ++j) {
    rc[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)];
  }
  double dual_obj = 0.0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    double ax = 0.0;
    for (const auto& [j, a] : row.coeffs) {
      ax += a * x[static_cast<std::size_t>(j)];
      rc[static_cast<std::size_t>(j)] -= y[i] * a;
    }
    cert.primal_infeasibility =
        std::max(cert.primal_infeasibility, ax - row.rhs);
    cert.dual_infeasibility = std::max(cert.dual_infeasibility, y[i]);
    cert.slackness = std::max(cert.slackness, std::fabs(y[i] * (row.rhs - ax)));
    dual_obj += y[i] * row.rhs;
  }
  // Reduced costs act as the duals of the variable bounds.
  for (int j = 0; j < lp.num_vars; ++j) {
    double r = rc[static_cast<std::size_t>(j)];
    double lo = lp.lower[static_cast<std::size_t>(j)];
    double hi = lp.upper[static_cast<std::size_t>(j)];
    if (r >= 0.0) {
      dual_obj += r * lo;
    } else if (std::isfinite(hi)) {
      dual_obj += r * hi;
    } else {
      cert.dual_infeasibility = std::max(cert.dual_infeasibility, -r);
    }
  }
  cert.duality_gap = std::fabs(sol.objective - dual_obj);
  return cert;
}

}  // namespace mwsp::lp
