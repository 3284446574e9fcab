#include "deltadg/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace deltadg {

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  double dp_prev = 0.0;
  double dp = 1.0;
  for (int m = 1; m < n; ++m) {
    const double p_next = ((2 * m + 1) * x * p - m * p_prev) / (m + 1);
    const double dp_next = dp_prev + (2 * m + 1) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

namespace {

// Interior nodes solve x P_k - P_{k-1} = 0, i.e. (1 - x^2) P_k' = 0.
// Newton from Chebyshev--Gauss--Lobatto guesses; the upper half is mirrored.
void lobatto_rule(int k, std::vector<double>& nodes, std::vector<double>& weights) {
  const int n = k + 1;
  nodes.assign(n, 0.0);
  nodes.front() = -1.0;
  nodes.back() = 1.0;
  for (int i = 1; i <= (k - 1) / 2; ++i) {
    double x = -std::cos(std::numbers::pi * i / k);
    for (int iter = 0; iter < 100; ++iter) {
      const double pk = legendre(k, x).p;
      const double pkm1 = legendre(k - 1, x).p;
      const double dx = (x * pk - pkm1) / ((k + 1) * pk);
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    nodes[k - i] = -x;
  }
  if (k % 2 == 0) nodes[k / 2] = 0.0;

  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double pk = legendre(k, nodes[i]).p;
    weights[i] = 2.0 / (k * (k + 1) * pk * pk);
  }
}

}  // namespace

ElementBasis::ElementBasis(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("ElementBasis: degree " + std::to_string(degree) +
                                " outside [1, " + std::to_string(kMaxDegree) + "]");
  const int k = degree;
  const int n = k + 1;
  lobatto_rule(k, nodes_, weights_);

  bary_.assign(n, 1.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m)
      if (m != j) bary_[j] /= (nodes_[j] - nodes_[m]);

  diff_.assign(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = (bary_[j] / bary_[i]) / (nodes_[i] - nodes_[j]);
      diff_[i * n + j] = d;
      row += d;
    }
    diff_[i * n + i] = -row;
  }

  // M^{-1} = V V^T for the orthonormal Legendre Vandermonde V_im = sqrt((2m+1)/2) P_m(x_i).
  std::vector<double> vander(n * n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      vander[i * n + m] = std::sqrt((2 * m + 1) / 2.0) * legendre(m, nodes_[i]).p;
  lift_left_.assign(n, 0.0);
  lift_right_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) {
      lift_left_[i] += vander[i * n + m] * vander[m];
      lift_right_[i] += vander[i * n + m] * vander[k * n + m];
    }
  }

  // The (k+2)-point Lobatto rule is exact for the degree-2k integrands l_i l_j.
  std::vector<double> yq;
  std::vector<double> wq;
  lobatto_rule(k + 1, yq, wq);
  mass_.assign(n * n, 0.0);
  std::vector<double> unit(n, 0.0);
  std::vector<double> li(n);
  for (std::size_t q = 0; q < yq.size(); ++q) {
    for (int j = 0; j < n; ++j) {
      unit.assign(n, 0.0);
      unit[j] = 1.0;
      li[j] = interpolate(unit, yq[q]);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mass_[i * n + j] += wq[q] * li[i] * li[j];
  }
}

void ElementBasis::differentiate(std::span<const double> values, std::span<double> out) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = &diff_[i * n];
    for (int j = 0; j < n; ++j) s += row[j] * values[j];
    out[i] = s;
  }
}

double ElementBasis::interpolate(std::span<const double> values, double xi) const {
  if (values.size() != static_cast<std::size_t>(size()))
    throw std::invalid_argument("interpolate: expected " + std::to_string(size()) + " values");
  if (!(xi >= -1.0 && xi <= 1.0))
    throw std::out_of_range("interpolate: reference coordinate outside [-1, 1]");
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < size(); ++j) {
    const double diff = xi - nodes_[j];
    if (diff == 0.0) return values[j];
    const double c = bary_[j] / diff;
    num += c * values[j];
    den += c;
  }
  return num / den;
}

}  // namespace deltadg
