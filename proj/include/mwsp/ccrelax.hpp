#pragma once

#include <span>
#include <vector>

#include "mwsp/core.hpp"

namespace mwsp {

// Symmetric co-membership variables over all observation pairs, including
// blocked ones (those are normally 0).
struct EdgeVariables {
  explicit EdgeVariables(ObservationId n_observations)
      : n(n_observations),
        values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  double at(ObservationId a, ObservationId b) const {
    return values[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(b)];
  }
  void set(ObservationId a, ObservationId b, double v) {
    values[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(b)] = v;
    values[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(a)] = v;
  }

  ObservationId n = 0;
  std::vector<double> values;
};

// f_ab = sum over columns containing both a and b of gamma_g.
EdgeVariables gamma_to_f(ObservationId n_observations,
                         std::span<const Column> columns,
                         std::span<const double> gamma);

struct PairViolation {
  ObservationId a = 0, b = 0;
  double value = 0.0;
};

// Pairs escaping [0, 1] beyond the tolerance.
std::vector<PairViolation> check_bounds(const EdgeVariables& f,
                                        double tol = 1e-9);

struct CycleViolation {
  ObservationId a = 0, b = 0, apex = 0;
  double excess = 0.0;  // f(a,apex) + f(b,apex) - f(a,b) - 1
};

// Triangle transitivity: f(a,apex) + f(b,apex) <= 1 + f(a,b) for every pair
// {a, b} and apex; triangles suffice for all cycle inequalities.
std::vector<CycleViolation> check_cycle_inequalities(const EdgeVariables& f,
                                                     double tol = 1e-9);

// A hub tied to an odd rim cycle.
struct Wheel {
  ObservationId hub = 0;
  std::vector<ObservationId> rim;  // odd length >= 3, hub not on the rim
};

struct WheelViolation {
  Wheel wheel;
  double lhs = 0.0;  // sum over rim of f(rim_m, hub) - f(rim_m, rim_m+1)
  double rhs = 0.0;  // floor(|rim| / 2)
};

// Checks every wheel with rim length 3 up to max_rim (odd lengths only).
std::vector<WheelViolation> check_odd_wheels(const EdgeVariables& f,
                                             int max_rim = 5,
                                             double tol = 1e-9);

// Optimum of the correlation-clustering relaxation: edge variables in [0, 1]
// (blocked pairs fixed at 0), the doubled-theta objective, all triangle
// inequalities, and odd wheels up to rim length 5 separated lazily. Throws
// SizeLimitError when the instance exceeds max_n observations.
double solve_cc_lp(const Instance& instance, int max_n = 10);

struct TightnessReport {
  double packing_lp = 0.0;  // terminal column-generation LP value
  double cc_lp = 0.0;       // cycle + odd-wheel relaxation value
  double gap = 0.0;         // packing_lp - cc_lp; never meaningfully negative
};

// Runs exact column generation and the edge relaxation side by side.
TightnessReport compare_tightness(const Instance& instance, int max_n = 10);

}  // namespace mwsp
