#include "deltadg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace deltadg {

Mesh::Mesh(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 3)
    throw std::invalid_argument("mesh: need at least two elements with an interface at x = 0");
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j] > breakpoints_[j - 1]))
      throw std::invalid_argument("mesh: breakpoints must be strictly increasing");
  }
  for (std::size_t j = 1; j + 1 < breakpoints_.size(); ++j) {
    if (breakpoints_[j] == 0.0) interface_index_ = static_cast<int>(j);
  }
  if (interface_index_ < 0)
    throw std::invalid_argument("mesh: no interior breakpoint at x = 0");
}

Mesh Mesh::uniform(double a, double b, int elements) {
  if (!(a < b)) throw std::invalid_argument("mesh: require a < b");
  if (!(a < 0.0 && 0.0 < b)) throw std::invalid_argument("mesh: require a < 0 < b");
  if (elements < 2) throw std::invalid_argument("mesh: need at least two elements");
  const double h = (b - a) / elements;
  const double j0 = std::round(-a / h);
  if (std::abs(a + j0 * h) > 1e-12 * (b - a))
    throw std::invalid_argument("mesh: " + std::to_string(elements) +
                                " uniform elements on the domain have no breakpoint at x = 0");
  const int interface = static_cast<int>(j0);
  std::vector<double> bp(elements + 1);
  for (int j = 0; j <= elements; ++j) bp[j] = a + j * h;
  bp.front() = a;
  bp.back() = b;
  bp[interface] = 0.0;
  return Mesh(std::move(bp));
}

Mesh Mesh::from_breakpoints(std::vector<double> breakpoints) { return Mesh(std::move(breakpoints)); }

double Mesh::h_min() const {
  double h = std::numeric_limits<double>::infinity();
  for (int e = 0; e < elements(); ++e) h = std::min(h, width(e));
  return h;
}

double Mesh::to_physical(int e, double xi) const {
  // Endpoints are returned bit-exactly so the interface node is x == 0.
  if (xi == -1.0) return left(e);
  if (xi == 1.0) return right(e);
  return left(e) + 0.5 * (xi + 1.0) * width(e);
}

double Mesh::to_reference(int e, double x) const {
  if (x == left(e)) return -1.0;
  if (x == right(e)) return 1.0;
  return std::clamp(2.0 * (x - left(e)) / width(e) - 1.0, -1.0, 1.0);
}

SidedPoint Grid::point(int e, int i) const {
  return {x(e, i), i == basis_.degree() ? Side::kLeft : Side::kRight};
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

void StateVector::axpy(double alpha, const StateVector& other) {
  auto add = [alpha](std::vector<double>& y, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
  };
  add(psibar.data(), other.psibar.data());
  add(pi.data(), other.pi.data());
  add(phi.data(), other.phi.data());
}

DistributionalPart DistributionalPart::from(const ReducedSource& reduced) {
  return {reduced.recon, reduced.f};
}

std::vector<std::pair<int, double>> DistributionalPart::evaluate(double t) const {
  std::vector<std::pair<int, double>> out;
  for (const auto& d : terms)
    if (!d.coefficient.is_zero()) out.emplace_back(d.order, d.coefficient(t));
  return out;
}

GridFunction sample(const Grid& grid, const std::function<double(SidedPoint)>& f) {
  GridFunction u(grid);
  for (int e = 0; e < grid.elements(); ++e)
    for (int i = 0; i < grid.nodes_per_element(); ++i) u(e, i) = f(grid.point(e, i));
  return u;
}

double eval_sided(const Grid& grid, const GridFunction& u, SidedPoint p) {
  const Mesh& mesh = grid.mesh();
  if (!(p.x >= mesh.a() && p.x <= mesh.b()))
    throw std::out_of_range("eval_sided: x = " + std::to_string(p.x) + " outside the domain");
  const auto& bp = mesh.breakpoints();
  int e;
  auto it = std::find(bp.begin(), bp.end(), p.x);
  if (it != bp.end()) {
    const int j = static_cast<int>(it - bp.begin());
    if (j == 0) {
      e = 0;
    } else if (j == mesh.elements()) {
      e = mesh.elements() - 1;
    } else {
      e = p.side == Side::kLeft ? j - 1 : j;
    }
  } else {
    e = static_cast<int>(std::upper_bound(bp.begin(), bp.end(), p.x) - bp.begin()) - 1;
  }
  return grid.basis().interpolate(u.element(e), mesh.to_reference(e, p.x));
}

double heaviside(SidedPoint p) {
  if (p.x == 0.0) return p.side == Side::kRight ? 1.0 : 0.0;
  return p.x > 0.0 ? 1.0 : 0.0;
}

double sign(SidedPoint p) {
  if (p.x == 0.0) return p.side == Side::kRight ? 1.0 : -1.0;
  return p.x > 0.0 ? 1.0 : -1.0;
}

GridFunction heaviside_on_grid(const Grid& grid, Direction direction) {
  return sample(grid, [direction](SidedPoint p) {
    if (direction == Direction::kRightMoving) return heaviside(p);
    return heaviside({-p.x, p.side == Side::kLeft ? Side::kRight : Side::kLeft});
  });
}

}  // namespace deltadg
