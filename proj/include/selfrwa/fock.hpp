#pragma once

// Fock-diagonal elements <n|V(x)|n> of a Taylor-expandable potential in the
// basis of an oscillator with frequency omega, and the self-RWA energy built
// on them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "selfrwa/errors.hpp"
#include "selfrwa/ordering.hpp"
#include "selfrwa/potential.hpp"
#include "selfrwa/quadrature.hpp"
#include "selfrwa/specfun.hpp"

namespace selfrwa {

enum class Summation {
  plain,  ///< direct partial sums with a relative tail test
  wynn,   ///< Wynn epsilon extrapolation, column by column
};

struct SeriesOptions {
  double tol = 1e-14;
  int kmax = 200;
  Summation summation = Summation::plain;
};

namespace detail {

/// Incremental Wynn epsilon table; keeps only the latest anti-diagonal.
template <class Real>
class BasicWynnEpsilon {
 public:
  /// Adds the next partial sum and returns the current best estimate.
  Real push(const Real& s) {
    using std::isfinite;
    std::vector<Real> next;
    next.reserve(diag_.size() + 1);
    next.push_back(s);
    for (std::size_t k = 1; k <= diag_.size(); ++k) {
      const Real below = k >= 2 ? diag_[k - 2] : Real(0);
      const Real denom = next[k - 1] - diag_[k - 1];
      if (denom == 0) break;
      const Real v = below + 1 / denom;
      if (!isfinite(v)) break;
      next.push_back(v);
    }
    diag_ = std::move(next);
    const std::size_t top = (diag_.size() - 1) & ~std::size_t{1};
    return diag_[top];
  }

 private:
  std::vector<Real> diag_;
};

using WynnEpsilon = BasicWynnEpsilon<double>;

inline void check_fock_args(double omega, int n, const char* who) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument(std::string(who) + ": omega must be > 0");
  if (n < 0) throw InvalidArgument(std::string(who) + ": n must be >= 0");
}

}  // namespace detail

namespace detail {

/// Wynn-resummed sum over l of weight * V^(2j+2l)(0) / ((4 omega)^l l!) for
/// one fixed j. Returns the estimate whose change from its predecessor was
/// smallest; `spread` receives that change.
inline double wynn_column(const TaylorPotential& v, double omega, int j, double weight, int lmax, double tol,
                          double& spread) {
  WynnEpsilon table;
  double sum = 0.0, outer = 1.0, prev = std::numeric_limits<double>::quiet_NaN();
  double best = 0.0;
  spread = std::numeric_limits<double>::infinity();
  int hits = 0;
  for (int l = 0; l <= lmax; ++l) {
    if (l > 0) outer /= 4.0 * omega * l;
    const double term = weight * outer * v.even_coeff(j + l);
    if (!std::isfinite(term)) break;
    sum += term;
    const double est = table.push(sum);
    if (l >= 2) {
      const double d = std::abs(est - prev);
      if (d < spread) {
        spread = d;
        best = est;
      }
      if (d <= tol * std::abs(est)) {
        if (++hits >= 2) return est;
      } else {
        hits = 0;
      }
    }
    prev = est;
  }
  return best;
}

}  // namespace detail

/// D_n(V, omega) = <n|V(x)|n> with x = (a + a_dag)/sqrt(2 omega):
///
///   sum_l 1/((2 omega)^l 2^l l!) sum_j V^(2j+2l)(0) / ((2 omega)^j j!^2) * n!/(n-j)!
///
/// The inner sum is finite (j <= n). The outer sum stops once two consecutive
/// terms are each below tol * |sum|.
///
/// With Summation::wynn each j-column is summed over l separately and
/// extrapolated, which also resums series on or beyond their radius of
/// convergence. Resummation amplifies rounding in the coefficients, so a
/// column whose estimates never settle to within 1e-10 (relative to
/// max(1, |estimate|)) raises TruncationFailure.
inline double fock_diagonal(const TaylorPotential& v, double omega, int n, const SeriesOptions& opt = {}) {
  detail::check_fock_args(omega, n, "fock_diagonal");
  if (!(opt.tol > 0.0)) throw InvalidArgument("fock_diagonal: tol must be > 0");
  if (opt.kmax < 4) throw InvalidArgument("fock_diagonal: kmax must be >= 4");

  const double two_omega = 2.0 * omega;
  const int jmax = std::min(n, opt.kmax);
  std::vector<double> inner_weight(static_cast<std::size_t>(jmax) + 1);
  inner_weight[0] = 1.0;
  for (int j = 0; j < jmax; ++j)
    inner_weight[j + 1] = inner_weight[j] * (n - j) / (two_omega * (j + 1.0) * (j + 1.0));

  if (opt.summation == Summation::wynn) {
    const double wynn_tol = std::max(opt.tol, 1e-13);
    const int lmax = std::min(opt.kmax, 80);
    double total = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      double spread = 0.0;
      const double col = detail::wynn_column(v, omega, j, inner_weight[j], lmax, wynn_tol, spread);
      if (!(spread <= 1e-10 * std::max(1.0, std::abs(col))) && col != 0.0) {
        throw TruncationFailure("fock_diagonal: resummation of column j = " + std::to_string(j) + " for " +
                                    v.label() + " did not settle",
                                total, spread);
      }
      total += col;
    }
    return total;
  }

  double sum = 0.0;
  double prev_term = std::numeric_limits<double>::infinity();
  double outer_weight = 1.0;  // 1/((4 omega)^l l!)
  double last_term = 0.0;

  for (int l = 0; l <= opt.kmax; ++l) {
    if (l > 0) outer_weight /= 2.0 * two_omega * l;
    double inner = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      const double c = v.even_coeff(j + l);
      if (c != 0.0) inner += c * inner_weight[j];
    }
    const double term = outer_weight * inner;
    if (!std::isfinite(term)) {
      throw TruncationFailure("fock_diagonal: non-finite term at l = " + std::to_string(l) + " for " + v.label(),
                              sum, last_term);
    }
    sum += term;
    last_term = std::abs(term);
    const double bound = opt.tol * std::abs(sum);
    if (std::abs(term) < bound && std::abs(prev_term) < bound) return sum;
    prev_term = term;
  }
  // Every coefficient reachable within kmax vanished (e.g. an odd potential).
  if (sum == 0.0 && last_term == 0.0) return 0.0;
  throw TruncationFailure("fock_diagonal: series for " + v.label() + " did not converge within kmax = " +
                              std::to_string(opt.kmax),
                          sum, last_term);
}

/// Independent route to the same number: Gauss-Hermite quadrature of
/// (1/(2^n n! sqrt(pi))) * integral V(u/sqrt(omega)) e^{-u^2} H_n(u)^2 du.
inline double fock_diagonal_oracle(const TaylorPotential& v, double omega, int n, int quad_order) {
  detail::check_fock_args(omega, n, "fock_diagonal_oracle");
  if (quad_order < 2 * n + 8)
    throw InvalidArgument("fock_diagonal_oracle: quad_order must be >= 2n + 8");
  const QuadratureRule rule = gauss_hermite(quad_order);
  const double scale = 1.0 / std::sqrt(omega);
  return rule.integrate([&](double u) {
    const double h = specfun::hermite_normalized(n, u);
    return v.value_at(u * scale) * h * h;
  });
}

/// Frequency of the harmonic oscillator hidden in V: sqrt(V''(0)).
inline double self_frequency(const TaylorPotential& v) {
  const double c = v.curvature();
  if (!(c > 0.0)) throw NoSelfOscillator("potential " + v.label() + " has V''(0) <= 0; no self-oscillator");
  return std::sqrt(c);
}

/// Self-RWA energy of level n for H = p^2/2 + V(x):
/// (omega/2)(n + 1/2) + <n|V|n>, omega = sqrt(V''(0)). The first term is the
/// kinetic half of the oscillator energy; the potential's own quadratic part
/// supplies the other half through the diagonal element.
inline double rwa_energy(const TaylorPotential& v, int n, const SeriesOptions& opt = {}) {
  if (n < 0) throw InvalidArgument("rwa_energy: n must be >= 0");
  const double omega = self_frequency(v);
  return 0.5 * omega * (n + 0.5) + fock_diagonal(v, omega, n, opt);
}

}  // namespace selfrwa
