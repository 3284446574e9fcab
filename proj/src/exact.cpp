#include "deltadg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

namespace deltadg {

namespace {

struct Trig {
  bool is_cos;
  double amplitude;
  double omega;
};

std::optional<Trig> as_trig(const TimeFunction& f) {
  using K = TimeFunction::Kind;
  double a = 1.0;
  const TimeFunction* leaf = &f;
  if (f.kind() == K::kScaled) {
    a = f.scale();
    leaf = &f.inner();
  }
  if (leaf->kind() == K::kCos) return Trig{true, a, leaf->omega()};
  if (leaf->kind() == K::kSin) return Trig{false, a, leaf->omega()};
  return std::nullopt;
}

// Profile P0(u) with Psi_0 = P0(t - |x|); P0' = -F/2 in both modes.
TimeFunction base_profile(const Trig& trig, ExactMode mode) {
  const double w = trig.omega;
  const double a = trig.amplitude;
  if (trig.is_cos) return TimeFunction::scaled(-a / (2.0 * w), TimeFunction::sin(w));
  if (mode == ExactMode::kGlobal) return TimeFunction::scaled(a / (2.0 * w), TimeFunction::cos(w));
  return TimeFunction::scaled(-a / (2.0 * w),
                              TimeFunction::constant(1.0) - TimeFunction::cos(w));
}

bool inside_cone(double t, double x) { return t - std::abs(x) > 0.0; }

// delta^(s-2-2r)(x) carries F^(2r)(t).
std::vector<std::pair<int, double>> delta_terms(const TimeFunction& f, int s, double t) {
  std::vector<std::pair<int, double>> out;
  for (int m = s - 2; m >= 0; m -= 2) out.emplace_back(m, f.derivative(s - 2 - m)(t));
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

double green_quadrature(const TimeFunction& amplitude, double t, double x, double c) {
  const double reach = t - std::abs(x + c);
  if (!(reach > 0.0)) return 0.0;
  // Fixed 30-point panels of width <= 1: the result is a smooth function of `reach`,
  // which the finite differences in exact_general rely on.
  auto integrand = [&](double y) { return amplitude(reach - y); };
  const int panels = static_cast<int>(std::ceil(reach));
  const double width = reach / panels;
  double integral = 0.0;
  for (int p = 0; p < panels; ++p)
    integral += boost::math::quadrature::gauss<double, 30>::integrate(integrand, p * width, (p + 1) * width);
  return -0.5 * integral;
}

bool has_closed_form(const ExactProblem& problem) {
  return problem.s >= 0 && problem.s <= 4 && as_trig(problem.amplitude).has_value();
}

ExactValue exact_eval(const ExactProblem& problem, double t, SidedPoint point) {
  if (t < 0.0) throw std::invalid_argument("exact: t must be >= 0");
  ExactValue v;
  const bool causal = problem.mode == ExactMode::kCausal;
  if (has_closed_form(problem)) {
    const TimeFunction p0 = base_profile(*as_trig(problem.amplitude), problem.mode);
    const double u = t - std::abs(point.x);
    const double sgn_s = problem.s % 2 == 0 ? 1.0 : sign(point);
    const double parity = problem.s % 2 == 0 ? 1.0 : -1.0;
    v.classical = sgn_s * parity * p0.derivative(problem.s)(u);
    if (causal && !inside_cone(t, point.x)) v.classical = 0.0;
  } else {
    if (!problem.allow_quadrature)
      throw std::invalid_argument("exact: no closed form for this (F, s) and quadrature disabled");
    if (!causal)
      throw std::invalid_argument("exact: quadrature only provides the causal solution");
    v.classical = problem.s == 0 ? green_quadrature(problem.amplitude, t, point.x)
                                 : exact_general(problem.amplitude, problem.s, t, point);
  }
  if (point.x == 0.0) v.delta_coeffs = delta_terms(problem.amplitude, problem.s, t);
  return v;
}

ExactFields exact_fields(const ExactProblem& problem, double t, SidedPoint point) {
  if (!has_closed_form(problem))
    throw std::invalid_argument("exact fields: need a closed-form problem");
  const TimeFunction p0 = base_profile(*as_trig(problem.amplitude), problem.mode);
  const double u = t - std::abs(point.x);
  const double sgn = sign(point);
  const double sgn_s = problem.s % 2 == 0 ? 1.0 : sgn;
  const double parity = problem.s % 2 == 0 ? 1.0 : -1.0;
  const double ps = parity * p0.derivative(problem.s)(u);
  const double dps = parity * p0.derivative(problem.s + 1)(u);
  ExactFields f{sgn_s * ps, -sgn_s * dps, -sgn_s * sgn * dps};
  if (problem.mode == ExactMode::kCausal && !inside_cone(t, point.x)) f = {};
  return f;
}

double exact_general(const TimeFunction& amplitude, int s, double t, SidedPoint point) {
  if (s < 0 || s > 4) throw std::invalid_argument("exact_general: need 0 <= s <= 4");
  if (s == 0) return green_quadrature(amplitude, t, point.x);
  const double sgn = sign(point);
  // Smooth continuation of the branch |x + c| = sgn (x + c).
  auto branch = [&](double c) {
    const double reach = t - sgn * (point.x + c);
    if (!(reach > 0.0))
      throw std::domain_error("exact_general: stencil crosses the light cone at t = " +
                              std::to_string(t) + ", x = " + std::to_string(point.x));
    return green_quadrature(amplitude, reach, 0.0, 0.0);
  };
  auto central = [&](double h) {
    // Central difference delta_h^s / h^s; error expands in even powers of h.
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= s; ++j) {
      acc += (j % 2 == 0 ? 1.0 : -1.0) * binom * branch((0.5 * s - j) * h);
      binom = binom * (s - j) / (j + 1);
    }
    return acc / std::pow(h, s);
  };
  constexpr double kH0 = 1e-2;
  constexpr int kLevels = 3;
  double table[kLevels];
  for (int level = 0; level < kLevels; ++level) table[level] = central(kH0 / (1 << level));
  for (int m = 1; m < kLevels; ++m) {
    const double factor = std::pow(4.0, m);
    for (int level = kLevels - 1; level >= m; --level)
      table[level] = (factor * table[level] - table[level - 1]) / (factor - 1.0);
  }
  return table[kLevels - 1];
}

double advection_exact(const TimeFunction& amplitude, Direction direction, double t,
                       SidedPoint point, ExactMode mode) {
  const bool right = direction == Direction::kRightMoving;
  const double h = right ? heaviside(point) : 1.0 - heaviside(point);
  if (h == 0.0) return 0.0;
  const double u = right ? t - point.x : t + point.x;
  if (mode == ExactMode::kCausal && u < 0.0) return 0.0;
  return amplitude(u);
}

}  // namespace deltadg
