#ifndef DELTADG_MESH_HPP_
#define DELTADG_MESH_HPP_

#include <functional>
#include <span>
#include <vector>

#include "deltadg/reduction.hpp"
#include "deltadg/spectral.hpp"

namespace deltadg {

/// Partition a = x_0 < x_1 < ... < x_E = b with some interior x_j == 0 exactly.
class Mesh {
 public:
  /// Uniform partition; throws if no breakpoint lands on 0.
  static Mesh uniform(double a, double b, int elements);
  static Mesh from_breakpoints(std::vector<double> breakpoints);

  int elements() const { return static_cast<int>(breakpoints_.size()) - 1; }
  double a() const { return breakpoints_.front(); }
  double b() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// Index j with breakpoints()[j] == 0.
  int interface_index() const { return interface_index_; }
  /// Element whose right endpoint is x = 0.
  int left_of_interface() const { return interface_index_ - 1; }
  /// Element whose left endpoint is x = 0.
  int right_of_interface() const { return interface_index_; }

  double left(int e) const { return breakpoints_[e]; }
  double right(int e) const { return breakpoints_[e + 1]; }
  double width(int e) const { return breakpoints_[e + 1] - breakpoints_[e]; }
  double h_min() const;

  double to_physical(int e, double xi) const;
  double to_reference(int e, double x) const;

 private:
  explicit Mesh(std::vector<double> breakpoints);
  std::vector<double> breakpoints_;
  int interface_index_ = -1;
};

enum class Side { kLeft, kRight };

/// A point together with the one-sided limit to take when it sits on a breakpoint.
struct SidedPoint {
  double x = 0.0;
  Side side = Side::kRight;
};

enum class Direction { kRightMoving, kLeftMoving };

/// Mesh plus the shared reference basis.
class Grid {
 public:
  Grid(Mesh mesh, int degree) : mesh_(std::move(mesh)), basis_(degree) {}

  const Mesh& mesh() const { return mesh_; }
  const ElementBasis& basis() const { return basis_; }
  int elements() const { return mesh_.elements(); }
  int nodes_per_element() const { return basis_.size(); }
  double x(int e, int i) const { return mesh_.to_physical(e, basis_.nodes()[i]); }
  /**
   * Node (e, i) as a sided point. Endpoint nodes carry the limit from inside
   * their own element, so the two copies of a shared node see each side.
   */
  SidedPoint point(int e, int i) const;

 private:
  Mesh mesh_;
  ElementBasis basis_;
};

/// Per-element nodal values; duplicated interface nodes are stored separately.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(int elements, int nodes_per_element, double value = 0.0)
      : elements_(elements), npe_(nodes_per_element), data_(elements * nodes_per_element, value) {}
  explicit GridFunction(const Grid& grid, double value = 0.0)
      : GridFunction(grid.elements(), grid.nodes_per_element(), value) {}

  int elements() const { return elements_; }
  int nodes_per_element() const { return npe_; }
  bool conforms_to(const Grid& grid) const {
    return elements_ == grid.elements() && npe_ == grid.nodes_per_element();
  }

  double& operator()(int e, int i) { return data_[e * npe_ + i]; }
  double operator()(int e, int i) const { return data_[e * npe_ + i]; }
  std::span<double> element(int e) { return {data_.data() + e * npe_, static_cast<std::size_t>(npe_)}; }
  std::span<const double> element(int e) const {
    return {data_.data() + e * npe_, static_cast<std::size_t>(npe_)};
  }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double max_abs() const;

 private:
  int elements_ = 0;
  int npe_ = 0;
  std::vector<double> data_;
};

/// (psibar, pi, phi) with pi = -d/dt psibar and phi the classical part of d/dx psibar.
struct StateVector {
  GridFunction psibar;
  GridFunction pi;
  GridFunction phi;

  StateVector() = default;
  explicit StateVector(const Grid& grid) : psibar(grid), pi(grid), phi(grid) {}

  bool conforms_to(const Grid& grid) const {
    return psibar.conforms_to(grid) && pi.conforms_to(grid) && phi.conforms_to(grid);
  }
  /// this += alpha * other
  void axpy(double alpha, const StateVector& other);
};

/**
 * Delta-supported pieces that are removed before discretization and reattached
 * on output: psi = psibar + sum_m c_m(t) delta^(m)(x), and the auxiliary field
 * phi_hat = phi + phi_delta(t) delta(x).
 */
struct DistributionalPart {
  std::vector<DeltaTerm> terms;
  TimeFunction phi_delta;

  static DistributionalPart from(const ReducedSource& reduced);
  /// (order, coefficient value) at time t, skipping structurally zero terms.
  std::vector<std::pair<int, double>> evaluate(double t) const;
};

/// Samples f at every node using that node's sided point.
GridFunction sample(const Grid& grid, const std::function<double(SidedPoint)>& f);

/// Value of u at p; on an interior breakpoint, the element selected by p.side.
double eval_sided(const Grid& grid, const GridFunction& u, SidedPoint p);

/**
 * H(x) for right-moving problems, H(-x) for left-moving ones. The duplicated
 * x = 0 node takes the value of its own element (left elements see H(0-)).
 */
GridFunction heaviside_on_grid(const Grid& grid, Direction direction);

/// Classical Heaviside with H(0) = 1, except at x == 0 where the side decides.
double heaviside(SidedPoint p);
/// sgn(x); at x == 0 returns -1 for Side::kLeft and +1 for Side::kRight.
double sign(SidedPoint p);

}  // namespace deltadg

#endif  // DELTADG_MESH_HPP_
