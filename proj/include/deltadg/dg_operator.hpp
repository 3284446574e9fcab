#ifndef DELTADG_DG_OPERATOR_HPP_
#define DELTADG_DG_OPERATOR_HPP_

#include <string>

#include "deltadg/mesh.hpp"
#include "deltadg/reduction.hpp"
#include "deltadg/timefn.hpp"
#include "json.hpp"

namespace deltadg {

/// Numerical flux for (psibar, pi, phi); the psibar row of the physical flux is zero.
struct FluxTriple {
  double psibar = 0.0;
  double pi = 0.0;
  double phi = 0.0;
};

/// w+ = (pi + phi)/2 moves right, w- = (pi - phi)/2 moves left.
struct Characteristics {
  double plus = 0.0;
  double minus = 0.0;
};

inline Characteristics to_characteristics(double pi, double phi) {
  return {0.5 * (pi + phi), 0.5 * (pi - phi)};
}
inline void from_characteristics(Characteristics w, double& pi, double& phi) {
  pi = w.plus + w.minus;
  phi = w.plus - w.minus;
}

/// Upwind flux: w+ taken from the left state, w- from the right.
FluxTriple upwind_flux(double pi_left, double phi_left, double pi_right, double phi_right);

/**
 * Interface terms of the delta source. L(t) feeds w- in the element left of x = 0,
 * R(t) feeds w+ in the element to the right: L = (G + F')/2, R = (G - F')/2.
 */
struct InterfaceMod {
  TimeFunction left;
  TimeFunction right;
};

InterfaceMod interface_modification(const ReducedSource& reduced);

/// V(x): zero, constant c, or A exp(-(x - x0)^2 / (2 sigma^2)).
class Potential {
 public:
  enum class Kind { kZero, kConstant, kGaussian };

  Potential() = default;
  static Potential zero() { return {}; }
  static Potential constant(double c);
  static Potential gaussian(double amplitude, double center, double sigma);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::kZero; }
  double operator()(double x) const;
  double derivative(double x) const;
  GridFunction sample(const Grid& grid) const;

  nlohmann::json to_json() const;
  static Potential from_json(const nlohmann::json& j);

 private:
  Kind kind_ = Kind::kZero;
  double a_ = 0.0;
  double x0_ = 0.0;
  double sigma_ = 1.0;
};

enum class BoundaryCondition { kSommerfeld };

/// Mass matrix used to lift the flux differences; kLumped uses the LGL weights.
enum class MassMatrix { kExact, kLumped };

/**
 * Strong-form nodal DG right-hand side of
 *   psibar_t + pi = 0,  pi_t + phi_x + V psibar = G delta,  phi_t + pi_x = -F' delta.
 * The delta source enters only through the numerical flux at x = 0.
 */
void rhs(const StateVector& state, double t, const Grid& grid, const GridFunction& potential,
         const InterfaceMod& mod, BoundaryCondition bc, MassMatrix mass, StateVector& out);

StateVector rhs(const StateVector& state, double t, const Grid& grid,
                const GridFunction& potential, const InterfaceMod& mod,
                BoundaryCondition bc = BoundaryCondition::kSommerfeld,
                MassMatrix mass = MassMatrix::kExact);

/**
 * Scalar upwind DG for psibar_t + c psibar_x = s(t) delta(x), c = +1 for
 * right-moving and -1 for left-moving. The source is added to the upwind flux on
 * the downwind side of x = 0. Inflow boundaries see zero data.
 */
GridFunction advection_rhs(const GridFunction& psibar, double t, const Grid& grid,
                           const TimeFunction& amplitude,
                           Direction direction = Direction::kRightMoving,
                           MassMatrix mass = MassMatrix::kExact);

/**
 * Discrete energy sum_j (h_j/2) (pi^T M pi + phi^T M phi) / 2 in the norm of the
 * chosen mass matrix; for kLumped this is sum_j (h_j/2) sum_i w_i (pi_i^2 + phi_i^2) / 2.
 */
double energy(const Grid& grid, const StateVector& state, MassMatrix mass = MassMatrix::kExact);

}  // namespace deltadg

#endif  // DELTADG_DG_OPERATOR_HPP_
