#include "deltadg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deltadg {

std::vector<int> front_elements(const Mesh& mesh, double t) {
  std::vector<int> out;
  for (int e = 0; e < mesh.elements(); ++e) {
    const bool has_right = mesh.left(e) <= t && t <= mesh.right(e);
    const bool has_left = mesh.left(e) <= -t && -t <= mesh.right(e);
    if (has_right || has_left) out.push_back(e);
  }
  return out;
}

ConstraintReport constraint(const Grid& grid, const StateVector& state,
                            const ReducedSource& reduced, double t) {
  if (!state.conforms_to(grid)) throw std::invalid_argument("constraint: grid mismatch");
  ConstraintReport r;
  r.t = t;
  r.delta_part_expected = reduced.f.is_zero() ? 0.0 : reduced.f(t);
  r.excluded_elements = front_elements(grid.mesh(), t);
  r.grid_constraint = GridFunction(grid);

  const int n = grid.nodes_per_element();
  const auto& w = grid.basis().weights();
  std::vector<double> dpsi(n);
  double l2 = 0.0;
  for (int e = 0; e < grid.elements(); ++e) {
    grid.basis().differentiate(state.psibar.element(e), dpsi);
    const double scale = 2.0 / grid.mesh().width(e);
    for (int i = 0; i < n; ++i) r.grid_constraint(e, i) = state.phi(e, i) - scale * dpsi[i];
    if (std::find(r.excluded_elements.begin(), r.excluded_elements.end(), e) !=
        r.excluded_elements.end())
      continue;
    double local = 0.0;
    for (int i = 0; i < n; ++i) {
      const double c = r.grid_constraint(e, i);
      r.max_norm = std::max(r.max_norm, std::abs(c));
      local += w[i] * c * c;
    }
    l2 += 0.5 * grid.mesh().width(e) * local;
  }
  r.l2_norm = std::sqrt(l2);
  return r;
}

double spurious_solution(double f0, double t, SidedPoint point) {
  const double x = point.x;
  const double h_x = heaviside(point);
  const double h_minus_x = 1.0 - h_x;
  // Fronts use the classical H(0) = 1.
  const double h_left_front = x + t >= 0.0 ? 1.0 : 0.0;
  const double h_right_front = t - x >= 0.0 ? 1.0 : 0.0;
  return 0.5 * f0 * (h_left_front * h_minus_x - h_right_front * h_x);
}

ReducedSource apply_turnon(const ReducedSource& reduced, double tau, double rate, bool include_g) {
  if (!(tau > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("turn-on: tau and rate must be positive");
  const TimeFunction window = TimeFunction::erf_window(tau, rate);
  ReducedSource out = reduced;
  out.f = TimeFunction::product(window, reduced.f);
  if (include_g) out.g = TimeFunction::product(window, reduced.g);
  return out;
}

OffsetSummary measure_offset(const Grid& grid, const GridFunction& numerical,
                             const GridFunction& reference, double t) {
  const std::vector<int> skip = front_elements(grid.mesh(), t);
  OffsetSummary s;
  double left_sum = 0.0;
  double right_sum = 0.0;
  const int split = grid.mesh().right_of_interface();
  for (int e = 0; e < grid.elements(); ++e) {
    if (std::find(skip.begin(), skip.end(), e) != skip.end()) continue;
    for (int i = 0; i < grid.nodes_per_element(); ++i) {
      const double d = numerical(e, i) - reference(e, i);
      s.max_abs = std::max(s.max_abs, std::abs(d));
      if (e < split) {
        left_sum += d;
        ++s.left_nodes;
      } else {
        right_sum += d;
        ++s.right_nodes;
      }
    }
  }
  if (s.left_nodes > 0) s.left_mean = left_sum / s.left_nodes;
  if (s.right_nodes > 0) s.right_mean = right_sum / s.right_nodes;
  return s;
}

}  // namespace deltadg
