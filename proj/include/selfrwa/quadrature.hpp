#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "selfrwa/eigen.hpp"
#include "selfrwa/errors.hpp"

namespace selfrwa {

/// Gauss rule for the weight e^{-x^2} on the real line.
struct QuadratureRule {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< positive, sum to sqrt(pi)
  int order = 0;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

inline constexpr int kMaxGaussHermiteOrder = 400;

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix with
/// off-diagonals sqrt(j/2); weight_i = sqrt(pi) * (first eigenvector component)^2.
inline QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > kMaxGaussHermiteOrder)
    throw InvalidArgument("gauss_hermite: order must lie in [1, " +
                          std::to_string(kMaxGaussHermiteOrder) + "], got " + std::to_string(order));
  const auto n = static_cast<std::size_t>(order);
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n - 1);
  for (std::size_t j = 1; j < n; ++j) off[j - 1] = std::sqrt(0.5 * static_cast<double>(j));

  auto [x, v0] = symtridiag_eigen_first_components(diag, off);

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) {
    // The rule is symmetric; pair i with its mirror to remove rounding asymmetry.
    const std::size_t m = n - 1 - i;
    rule.nodes[i] = 0.5 * (x[i] - x[m]);
    rule.weights[i] = 0.5 * sqrt_pi * (v0[i] * v0[i] + v0[m] * v0[m]);
  }
  if (n % 2) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace selfrwa
