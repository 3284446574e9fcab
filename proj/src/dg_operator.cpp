#include "deltadg/dg_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace deltadg {

FluxTriple upwind_flux(double pi_left, double phi_left, double pi_right, double phi_right) {
  FluxTriple f;
  f.pi = 0.5 * (phi_left + phi_right) + 0.5 * (pi_left - pi_right);
  f.phi = 0.5 * (pi_left + pi_right) + 0.5 * (phi_left - phi_right);
  return f;
}

InterfaceMod interface_modification(const ReducedSource& reduced) {
  const TimeFunction fdot = reduced.f.derivative(1);
  return {TimeFunction::scaled(0.5, reduced.g + fdot), TimeFunction::scaled(0.5, reduced.g - fdot)};
}

Potential Potential::constant(double c) {
  Potential p;
  if (c == 0.0) return p;
  p.kind_ = Kind::kConstant;
  p.a_ = c;
  return p;
}

Potential Potential::gaussian(double amplitude, double center, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("potential: gaussian sigma must be positive");
  Potential p;
  p.kind_ = Kind::kGaussian;
  p.a_ = amplitude;
  p.x0_ = center;
  p.sigma_ = sigma;
  return p;
}

double Potential::operator()(double x) const {
  switch (kind_) {
    case Kind::kZero:
      return 0.0;
    case Kind::kConstant:
      return a_;
    case Kind::kGaussian: {
      const double r = (x - x0_) / sigma_;
      return a_ * std::exp(-0.5 * r * r);
    }
  }
  return 0.0;
}

double Potential::derivative(double x) const {
  if (kind_ != Kind::kGaussian) return 0.0;
  return -(x - x0_) / (sigma_ * sigma_) * (*this)(x);
}

GridFunction Potential::sample(const Grid& grid) const {
  GridFunction v(grid);
  for (int e = 0; e < grid.elements(); ++e)
    for (int i = 0; i < grid.nodes_per_element(); ++i) v(e, i) = (*this)(grid.x(e, i));
  for (double s : v.data())
    if (!std::isfinite(s)) throw std::invalid_argument("potential: non-finite sample");
  return v;
}

nlohmann::json Potential::to_json() const {
  switch (kind_) {
    case Kind::kZero:
      return {{"kind", "zero"}};
    case Kind::kConstant:
      return {{"kind", "constant"}, {"c", a_}};
    case Kind::kGaussian:
      return {{"kind", "gaussian"}, {"A", a_}, {"x0", x0_}, {"sigma", sigma_}};
  }
  return {};
}

Potential Potential::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return zero();
  if (kind == "constant") return constant(j.at("c").get<double>());
  if (kind == "gaussian")
    return gaussian(j.at("A").get<double>(), j.value("x0", 0.0), j.at("sigma").get<double>());
  throw std::invalid_argument("potential: unknown kind \"" + kind + "\"");
}

namespace {

// out_e += (2/h) (M^{-1} e_k right_jump - M^{-1} e_0 left_jump), jumps being F_h - F*.
void add_lift(const ElementBasis& basis, MassMatrix mass, double h, double left_jump,
              double right_jump, std::span<double> out) {
  const int k = basis.degree();
  const double scale = 2.0 / h;
  if (mass == MassMatrix::kLumped) {
    out[k] += scale * right_jump / basis.weights().back();
    out[0] -= scale * left_jump / basis.weights().front();
    return;
  }
  const auto& lr = basis.lift_right();
  const auto& ll = basis.lift_left();
  for (int i = 0; i <= k; ++i) out[i] += scale * (lr[i] * right_jump - ll[i] * left_jump);
}

double mass_norm2(const ElementBasis& basis, MassMatrix mass, std::span<const double> u) {
  const int n = basis.size();
  double s = 0.0;
  if (mass == MassMatrix::kLumped) {
    for (int i = 0; i < n; ++i) s += basis.weights()[i] * u[i] * u[i];
    return s;
  }
  const auto& m = basis.mass_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += u[i] * m[i * n + j] * u[j];
  return s;
}

}  // namespace

void rhs(const StateVector& state, double t, const Grid& grid, const GridFunction& potential,
         const InterfaceMod& mod, BoundaryCondition /*bc*/, MassMatrix mass, StateVector& out) {
  if (!state.conforms_to(grid) || !potential.conforms_to(grid))
    throw std::invalid_argument("rhs: state does not match the grid");
  if (!out.conforms_to(grid)) out = StateVector(grid);

  const Mesh& mesh = grid.mesh();
  const ElementBasis& basis = grid.basis();
  const int ne = grid.elements();
  const int n = grid.nodes_per_element();
  const int k = basis.degree();

  std::vector<double> dpi(n);
  std::vector<double> dphi(n);
  for (int e = 0; e < ne; ++e) {
    const double scale = 2.0 / mesh.width(e);
    basis.differentiate(state.pi.element(e), dpi);
    basis.differentiate(state.phi.element(e), dphi);
    for (int i = 0; i < n; ++i) {
      out.psibar(e, i) = -state.pi(e, i);
      out.pi(e, i) = -scale * dphi[i] - potential(e, i) * state.psibar(e, i);
      out.phi(e, i) = -scale * dpi[i];
    }
  }

  // Flux differences F_h - F* at each element end, for the pi and phi rows.
  std::vector<FluxTriple> left_jump(ne);
  std::vector<FluxTriple> right_jump(ne);

  // One numerical flux per breakpoint; ghost states zero the incoming characteristic.
  const double l_t = mod.left.is_zero() ? 0.0 : mod.left(t);
  const double r_t = mod.right.is_zero() ? 0.0 : mod.right(t);
  for (int j = 0; j <= ne; ++j) {
    double pi_l, phi_l, pi_r, phi_r;
    if (j == 0) {
      pi_r = state.pi(0, 0);
      phi_r = state.phi(0, 0);
      Characteristics w = to_characteristics(pi_r, phi_r);
      w.plus = 0.0;
      from_characteristics(w, pi_l, phi_l);
    } else if (j == ne) {
      pi_l = state.pi(ne - 1, k);
      phi_l = state.phi(ne - 1, k);
      Characteristics w = to_characteristics(pi_l, phi_l);
      w.minus = 0.0;
      from_characteristics(w, pi_r, phi_r);
    } else {
      pi_l = state.pi(j - 1, k);
      phi_l = state.phi(j - 1, k);
      pi_r = state.pi(j, 0);
      phi_r = state.phi(j, 0);
    }
    const FluxTriple star = upwind_flux(pi_l, phi_l, pi_r, phi_r);
    FluxTriple star_left = star;   // seen by element j-1
    FluxTriple star_right = star;  // seen by element j
    if (j == mesh.interface_index()) {
      star_left.pi -= l_t;
      star_left.phi += l_t;
      star_right.pi += r_t;
      star_right.phi += r_t;
    }
    // Physical flux F(U) = (0, phi, pi).
    if (j > 0) {
      right_jump[j - 1].pi = state.phi(j - 1, k) - star_left.pi;
      right_jump[j - 1].phi = state.pi(j - 1, k) - star_left.phi;
    }
    if (j < ne) {
      left_jump[j].pi = state.phi(j, 0) - star_right.pi;
      left_jump[j].phi = state.pi(j, 0) - star_right.phi;
    }
  }
  for (int e = 0; e < ne; ++e) {
    const double h = mesh.width(e);
    add_lift(basis, mass, h, left_jump[e].pi, right_jump[e].pi, out.pi.element(e));
    add_lift(basis, mass, h, left_jump[e].phi, right_jump[e].phi, out.phi.element(e));
  }
}

StateVector rhs(const StateVector& state, double t, const Grid& grid,
                const GridFunction& potential, const InterfaceMod& mod, BoundaryCondition bc,
                MassMatrix mass) {
  StateVector out(grid);
  rhs(state, t, grid, potential, mod, bc, mass, out);
  return out;
}

GridFunction advection_rhs(const GridFunction& psibar, double t, const Grid& grid,
                           const TimeFunction& amplitude, Direction direction, MassMatrix mass) {
  if (!psibar.conforms_to(grid)) throw std::invalid_argument("advection_rhs: grid mismatch");
  const Mesh& mesh = grid.mesh();
  const ElementBasis& basis = grid.basis();
  const int ne = grid.elements();
  const int n = grid.nodes_per_element();
  const int k = basis.degree();
  const double c = direction == Direction::kRightMoving ? 1.0 : -1.0;
  const double s = amplitude.is_zero() ? 0.0 : amplitude(t);

  GridFunction out(grid);
  std::vector<double> du(n);
  for (int e = 0; e < ne; ++e) {
    basis.differentiate(psibar.element(e), du);
    const double scale = 2.0 / mesh.width(e);
    for (int i = 0; i < n; ++i) out(e, i) = -c * scale * du[i];
  }
  std::vector<double> left_jump(ne, 0.0);
  std::vector<double> right_jump(ne, 0.0);
  for (int j = 0; j <= ne; ++j) {
    // Upwind state: from the left for c > 0, from the right for c < 0; inflow is zero.
    double upwind;
    if (direction == Direction::kRightMoving)
      upwind = j == 0 ? 0.0 : psibar(j - 1, k);
    else
      upwind = j == ne ? 0.0 : psibar(j, 0);
    double star_left = upwind;
    double star_right = upwind;
    if (j == mesh.interface_index()) {
      if (direction == Direction::kRightMoving)
        star_right += s;
      else
        star_left += s;
    }
    if (j > 0) right_jump[j - 1] = c * (psibar(j - 1, k) - star_left);
    if (j < ne) left_jump[j] = c * (psibar(j, 0) - star_right);
  }
  for (int e = 0; e < ne; ++e)
    add_lift(basis, mass, mesh.width(e), left_jump[e], right_jump[e], out.element(e));
  return out;
}

double energy(const Grid& grid, const StateVector& state, MassMatrix mass) {
  double total = 0.0;
  for (int e = 0; e < grid.elements(); ++e) {
    const double local = mass_norm2(grid.basis(), mass, state.pi.element(e)) +
                         mass_norm2(grid.basis(), mass, state.phi.element(e));
    total += 0.5 * grid.mesh().width(e) * 0.5 * local;
  }
  return total;
}

}  // namespace deltadg
