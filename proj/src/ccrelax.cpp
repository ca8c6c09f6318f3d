#include "mwsp/ccrelax.hpp"

#include <algorithm>
#include <cmath>

#include "mwsp/colgen.hpp"
#include "mwsp/errors.hpp"
#include "mwsp/lp.hpp"

namespace mwsp {

EdgeVariables gamma_to_f(ObservationId n_observations,
                         std::span<const Column> columns,
                         std::span<const double> gamma) {
  EdgeVariables f(n_observations);
  for (std::size_t g = 0; g < columns.size(); ++g) {
    double weight = gamma[g];
    if (weight == 0.0) continue;
    const auto& members = columns[g].members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        f.set(members[i], members[j],
              f.at(members[i], members[j]) + weight);
      }
    }
  }
  return f;
}

std::vector<PairViolation> check_bounds(const EdgeVariables& f, double tol) {
  std::vector<PairViolation> violations;
  for (ObservationId a = 0; a < f.n; ++a) {
    for (ObservationId b = a + 1; b < f.n; ++b) {
      double v = f.at(a, b);
      if (v < -tol || v > 1.0 + tol) violations.push_back({a, b, v});
    }
  }
  return violations;
}

std::vector<CycleViolation> check_cycle_inequalities(const EdgeVariables& f,
                                                     double tol) {
  std::vector<CycleViolation> violations;
  for (ObservationId a = 0; a < f.n; ++a) {
    for (ObservationId b = a + 1; b < f.n; ++b) {
      for (ObservationId apex = 0; apex < f.n; ++apex) {
        if (apex == a || apex == b) continue;
        double excess = f.at(a, apex) + f.at(b, apex) - f.at(a, b) - 1.0;
        if (excess > tol) violations.push_back({a, b, apex, excess});
      }
    }
  }
  return violations;
}

namespace {

// Canonical odd rims over a node set: first element is the smallest, second
// smaller than last, killing rotations and reflections.
template <typename Visit>
void enumerate_wheels(ObservationId n, int max_rim, Visit&& visit) {
  std::vector<ObservationId> pool;
  for (int length = 3; length <= max_rim; length += 2) {
    if (length + 1 > n) continue;
    std::vector<ObservationId> rim_set(static_cast<std::size_t>(length));
    // Choose the rim set by lexicographic combinations.
    std::vector<int> comb(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      for (int i = 0; i < length; ++i) {
        rim_set[static_cast<std::size_t>(i)] =
            static_cast<ObservationId>(comb[static_cast<std::size_t>(i)]);
      }
      // Permute rim_set[1..] with the reflection killed.
      std::vector<ObservationId> rest(rim_set.begin() + 1, rim_set.end());
      std::sort(rest.begin(), rest.end());
      do {
        if (rest.size() > 1 && rest.front() > rest.back()) continue;
        std::vector<ObservationId> rim;
        rim.reserve(static_cast<std::size_t>(length));
        rim.push_back(rim_set[0]);
        rim.insert(rim.end(), rest.begin(), rest.end());
        for (ObservationId hub = 0; hub < n; ++hub) {
          if (std::find(rim.begin(), rim.end(), hub) != rim.end()) continue;
          visit(hub, rim);
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
      // Next combination.
      int i = length - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - length + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < length; ++j) {
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
}

double wheel_lhs(const EdgeVariables& f, ObservationId hub,
                 const std::vector<ObservationId>& rim) {
  double lhs = 0.0;
  for (std::size_t m = 0; m < rim.size(); ++m) {
    ObservationId cur = rim[m];
    ObservationId next = rim[(m + 1) % rim.size()];
    lhs += f.at(cur, hub) - f.at(cur, next);
  }
  return lhs;
}

}  // namespace

std::vector<WheelViolation> check_odd_wheels(const EdgeVariables& f,
                                             int max_rim, double tol) {
  std::vector<WheelViolation> violations;
  enumerate_wheels(f.n, max_rim,
                   [&](ObservationId hub, const std::vector<ObservationId>& rim) {
                     double lhs = wheel_lhs(f, hub, rim);
                     double rhs = std::floor(static_cast<double>(rim.size()) / 2.0);
                     if (lhs > rhs + tol) {
                       violations.push_back({Wheel{hub, rim}, lhs, rhs});
                     }
                   });
  return violations;
}

double solve_cc_lp(const Instance& instance, int max_n) {
  ObservationId n = instance.n_observations();
  if (n > max_n) {
    throw SizeLimitError("edge relaxation limited to small instances");
  }
  // One variable per feasible pair; blocked pairs are identically 0 and
  // simply vanish from rows.
  std::vector<std::pair<ObservationId, ObservationId>> pairs;
  for (ObservationId a = 0; a < n; ++a) {
    for (ObservationId b = a + 1; b < n; ++b) {
      if (instance.pair_feasible(a, b)) pairs.push_back({a, b});
    }
  }
  std::vector<int> var(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       -1);
  lp::LinearProgram lp;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [a, b] = pairs[p];
    double theta = instance.pair_cost(a, b).value();
    int v = lp.add_variable(2.0 * theta, 0.0, 1.0);
    var[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(b)] = v;
    var[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(a)] = v;
  }
  auto var_of = [&](ObservationId a, ObservationId b) {
    return var[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(b)];
  };
  // Triangle rows bind only when both apex edges exist.
  for (ObservationId a = 0; a < n; ++a) {
    for (ObservationId b = a + 1; b < n; ++b) {
      for (ObservationId apex = 0; apex < n; ++apex) {
        if (apex == a || apex == b) continue;
        int va = var_of(a, apex);
        int vb = var_of(b, apex);
        if (va < 0 || vb < 0) continue;
        std::vector<std::pair<int, double>> coeffs{{va, 1.0}, {vb, 1.0}};
        int vab = var_of(a, b);
        if (vab >= 0) coeffs.push_back({vab, -1.0});
        lp.add_row(std::move(coeffs), 1.0);
      }
    }
  }

  for (int round = 0; round < 64; ++round) {
    lp::LpSolution sol = lp::solve(lp);
    if (sol.status != lp::LpStatus::kOptimal) {
      throw Error("edge relaxation solve failed");
    }
    EdgeVariables f(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      f.set(pairs[p].first, pairs[p].second, sol.primal[p]);
    }
    auto violated = check_odd_wheels(f, 5, 1e-9);
    if (violated.empty()) return sol.objective;
    for (const auto& violation : violated) {
      std::vector<std::pair<int, double>> coeffs;
      const auto& rim = violation.wheel.rim;
      for (std::size_t m = 0; m < rim.size(); ++m) {
        int spoke = var_of(rim[m], violation.wheel.hub);
        if (spoke >= 0) coeffs.push_back({spoke, 1.0});
        int edge = var_of(rim[m], rim[(m + 1) % rim.size()]);
        if (edge >= 0) coeffs.push_back({edge, -1.0});
      }
      lp.add_row(std::move(coeffs),
                 std::floor(static_cast<double>(rim.size()) / 2.0));
    }
  }
  throw Error("odd-wheel separation failed to converge");
}

TightnessReport compare_tightness(const Instance& instance, int max_n) {
  if (instance.n_observations() > max_n) {
    throw SizeLimitError("tightness comparison limited to small instances");
  }
  CgConfig config;
  config.doi.mode = DoiMode::kNone;
  config.pricing.strategy = PricingStrategy::kExact;
  config.pricing.exact_node_limit = std::max(24, max_n);
  CgResult cg = run_cg(instance, config);
  TightnessReport report;
  report.packing_lp = cg.lp_objective;
  report.cc_lp = solve_cc_lp(instance, max_n);
  report.gap = report.packing_lp - report.cc_lp;
  return report;
}

}  // namespace mwsp
