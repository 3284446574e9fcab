#ifndef DELTADG_DIAGNOSTICS_HPP_
#define DELTADG_DIAGNOSTICS_HPP_

#include <functional>
#include <vector>

#include "deltadg/mesh.hpp"
#include "deltadg/reduction.hpp"

namespace deltadg {

/**
 * C = phi - psibar_x + F(t) delta(x). Only the classical part is put on the
 * grid; the delta part is reported as its coefficient.
 */
struct ConstraintReport {
  double t = 0.0;
  GridFunction grid_constraint;
  double delta_part_expected = 0.0;
  double max_norm = 0.0;
  double l2_norm = 0.0;
  /// Elements skipped by the norms because they contain x = +t or x = -t.
  std::vector<int> excluded_elements;
};

ConstraintReport constraint(const Grid& grid, const StateVector& state,
                            const ReducedSource& reduced, double t);

/// Elements whose closed interval contains one of the fronts x = +-t.
std::vector<int> front_elements(const Mesh& mesh, double t);

/**
 * Offset left behind by an impulsive start with F(0) != 0:
 * F0/2 [H(x + t) H(-x) - H(t - x) H(x)], i.e. +F0/2 for -t < x < 0 and -F0/2 for 0 <= x < t.
 */
double spurious_solution(double f0, double t, SidedPoint point);

/// F -> f(t; tau, rate) F, and optionally G the same way.
ReducedSource apply_turnon(const ReducedSource& reduced, double tau, double rate,
                           bool include_g = false);

/// Per-side mean of (numerical - reference) over elements away from the fronts.
struct OffsetSummary {
  double left_mean = 0.0;
  double right_mean = 0.0;
  double max_abs = 0.0;
  int left_nodes = 0;
  int right_nodes = 0;
};

OffsetSummary measure_offset(const Grid& grid, const GridFunction& numerical,
                             const GridFunction& reference, double t);

}  // namespace deltadg

#endif  // DELTADG_DIAGNOSTICS_HPP_
