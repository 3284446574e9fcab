#ifndef DELTADG_TIMEFN_HPP_
#define DELTADG_TIMEFN_HPP_

#include <memory>
#include <vector>

#include "json.hpp"

namespace deltadg {

/**
 * @brief Closed-form scalar function of time with exact derivatives of any order.
 *
 * Values are immutable expression trees; copies share structure. Every kind is
 * smooth, so derivative(k) is always defined and returns another closed-form
 * tree (no finite differencing anywhere).
 *
 * The erf turn-on window is f(t; tau, rate) = (erf(sqrt(rate) (t - tau/2)) + 1) / 2.
 */
class TimeFunction {
 public:
  enum class Kind {
    kZero,
    kConstant,
    kCos,
    kSin,
    kPolynomial,
    kErfWindow,
    kSum,
    kProduct,
    kScaled,
  };

  /// The zero function.
  TimeFunction();

  static TimeFunction zero() { return TimeFunction(); }
  static TimeFunction constant(double c);
  /// cos(omega t)
  static TimeFunction cos(double omega = 1.0);
  /// sin(omega t)
  static TimeFunction sin(double omega = 1.0);
  /// sum_i coeffs[i] t^i
  static TimeFunction polynomial(std::vector<double> coeffs);
  static TimeFunction erf_window(double tau, double rate);
  static TimeFunction sum(std::vector<TimeFunction> terms);
  static TimeFunction product(TimeFunction a, TimeFunction b);
  static TimeFunction scaled(double c, TimeFunction inner);

  double eval(double t) const;
  double operator()(double t) const { return eval(t); }

  /// k-th derivative as a new tree. derivative(0) is *this.
  TimeFunction derivative(int k = 1) const;

  Kind kind() const;
  /// True only for the structural zero (not for functions that happen to vanish).
  bool is_zero() const { return kind() == Kind::kZero; }

  // Accessors for inspecting leaves (used by the closed-form oracles).
  double omega() const;         // kCos, kSin
  double constant_value() const;  // kConstant
  double scale() const;         // kScaled
  const TimeFunction& inner() const;  // kScaled
  const std::vector<TimeFunction>& children() const;  // kSum, kProduct

  nlohmann::json to_json() const;
  static TimeFunction from_json(const nlohmann::json& j);

 private:
  struct Node;
  explicit TimeFunction(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

TimeFunction operator+(const TimeFunction& a, const TimeFunction& b);
TimeFunction operator-(const TimeFunction& a, const TimeFunction& b);
TimeFunction operator-(const TimeFunction& a);
TimeFunction operator*(const TimeFunction& a, const TimeFunction& b);
TimeFunction operator*(double c, const TimeFunction& a);

}  // namespace deltadg

#endif  // DELTADG_TIMEFN_HPP_
