#ifndef DELTADG_SPECTRAL_HPP_
#define DELTADG_SPECTRAL_HPP_

#include <span>
#include <vector>

namespace deltadg {

/**
 * @brief Nodal basis on the reference element [-1, 1].
 *
 * Lagrange polynomials of degree k on the Legendre--Gauss--Lobatto nodes, i.e.
 * the roots of (1 - x^2) P_k'(x). The quadrature \f$ \sum_i w_i p(x_i) \f$ is exact
 * for polynomials of degree up to 2k - 1.
 */
class ElementBasis {
 public:
  static constexpr int kMaxDegree = 32;

  /// Throws std::invalid_argument unless 1 <= k <= kMaxDegree.
  explicit ElementBasis(int degree);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& barycentric_weights() const { return bary_; }

  /// Row-major (k+1) x (k+1) differentiation matrix: (D u)_i = sum_j D_ij u_j.
  double diff(int i, int j) const { return diff_[i * size() + j]; }
  const std::vector<double>& diff_matrix() const { return diff_; }

  /// out = D * values.
  void differentiate(std::span<const double> values, std::span<double> out) const;

  /// Exact mass matrix M_ij = int l_i l_j over [-1, 1], row-major.
  const std::vector<double>& mass_matrix() const { return mass_; }
  /// Columns M^{-1} e_0 and M^{-1} e_k of the exact inverse mass matrix.
  const std::vector<double>& lift_left() const { return lift_left_; }
  const std::vector<double>& lift_right() const { return lift_right_; }

  /// Barycentric Lagrange evaluation at xi in [-1, 1]; exact nodal value at a node.
  double interpolate(std::span<const double> values, double xi) const;

 private:
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> bary_;
  std::vector<double> diff_;
  std::vector<double> mass_;
  std::vector<double> lift_left_;
  std::vector<double> lift_right_;
};

/// Legendre polynomial P_n(x) and its derivative, by the three-term recurrence.
struct LegendreValue {
  double p;
  double dp;
};
LegendreValue legendre(int n, double x);

}  // namespace deltadg

#endif  // DELTADG_SPECTRAL_HPP_
