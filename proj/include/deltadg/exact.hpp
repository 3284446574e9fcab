#ifndef DELTADG_EXACT_HPP_
#define DELTADG_EXACT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "deltadg/mesh.hpp"
#include "deltadg/timefn.hpp"

namespace deltadg {

/**
 * Exact solutions of -Psi_tt + Psi_xx = F(t) delta^(s)(x).
 *
 * Causal mode is the zero-data solution, supported in the light cone t > |x|.
 * Global mode is the time-periodic particular solution written as a function of
 * t - |x| for all (t, x); it is what exact initial data reproduces.
 */
enum class ExactMode { kCausal, kGlobal };

struct ExactProblem {
  int s = 0;
  TimeFunction amplitude;
  ExactMode mode = ExactMode::kGlobal;
  /// Fall back to Green's-function quadrature when no closed form exists.
  bool allow_quadrature = false;
};

struct ExactValue {
  double classical = 0.0;
  /// (m, coefficient of delta^(m)(x)); only populated at x == 0.
  std::vector<std::pair<int, double>> delta_coeffs;
};

/// Classical fields of the reduced problem: psibar, pi = -psibar_t, phi = psibar_x.
struct ExactFields {
  double psibar = 0.0;
  double pi = 0.0;
  double phi = 0.0;
};

/// Psi(t, x; c, 0) = -1/2 int_0^{t-|x+c|} F(t - |x+c| - y) dy, zero outside the cone.
double green_quadrature(const TimeFunction& amplitude, double t, double x, double c = 0.0);

/// True when (F, s) is A cos(w t) or A sin(w t) with s <= 4.
bool has_closed_form(const ExactProblem& problem);

/// Throws std::invalid_argument for (F, s) without a closed form unless quadrature is allowed.
ExactValue exact_eval(const ExactProblem& problem, double t, SidedPoint point);

/// Closed-form fields for the grid comparisons and exact initial data.
ExactFields exact_fields(const ExactProblem& problem, double t, SidedPoint point);

/**
 * s-th c-derivative of green_quadrature at c = 0, by central differences with
 * Richardson extrapolation (h0 = 1e-2, three levels). The stencil follows the
 * smooth branch on `point.side` of the kink at x + c = 0; throws
 * std::domain_error when the stencil would cross the light cone.
 */
double exact_general(const TimeFunction& amplitude, int s, double t, SidedPoint point);

/**
 * Classical part of the advection solution: H(x) g(t - x) for right-moving and
 * H(-x) g(t + x) for left-moving transport. Causal mode also zeroes t < |x|.
 */
double advection_exact(const TimeFunction& amplitude, Direction direction, double t,
                       SidedPoint point, ExactMode mode = ExactMode::kGlobal);

}  // namespace deltadg

#endif  // DELTADG_EXACT_HPP_
