#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "selfrwa/errors.hpp"

namespace selfrwa::specfun {

using Rational = boost::multiprecision::cpp_rational;

/// Laguerre polynomial L_n(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
inline double laguerre(int n, double x) {
  if (n < 0) throw InvalidArgument("laguerre: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Physicists' Hermite polynomial H_n(x).
inline double hermite(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// H_n(x) / sqrt(2^n n! sqrt(pi)). Orthonormal against e^{-x^2}; stays finite
/// where H_n itself overflows.
inline double hermite_normalized(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite_normalized: negative degree");
  const double h0 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  if (n == 0) return h0;
  double prev = h0;
  double cur = std::numbers::sqrt2 * x * h0;
  for (int k = 1; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// H_n(0): zero for odd n, (-1)^{n/2} n!/(n/2)! for even n.
inline double hermite_at_zero(int n) {
  if (n < 0) throw InvalidArgument("hermite_at_zero: negative degree");
  if (n % 2) return 0.0;
  const int m = n / 2;
  const double mag = std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0));
  return (m % 2 ? -1.0 : 1.0) * std::round(mag);
}

/// Bessel J0. Backed by the standard library's cylindrical Bessel function.
inline double bessel_j0(double x) { return std::cyl_bessel_j(0.0, std::abs(x)); }

/// Rising factorial (a)_k.
inline double pochhammer(double a, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

namespace detail {
inline void check_terminating(int neg_n, bool c_hits_pole, int pole_index) {
  if (neg_n > 0) throw InvalidArgument("hyp2f1_terminating: first parameter must be a nonpositive integer");
  if (c_hits_pole)
    throw PoleError("hyp2f1_terminating: (c)_k vanishes at k = " + std::to_string(pole_index + 1) +
                    " before the series terminates");
}
}  // namespace detail

/// Terminating Gauss series 2F1(-n, b; c; z) = sum_{k=0..n} (-n)_k (b)_k / ((c)_k k!) z^k.
inline double hyp2f1_terminating(int neg_n, double b, double c, double z) {
  const int n = -neg_n;
  for (int j = 0; j < n; ++j)
    if (c + j == 0.0) detail::check_terminating(neg_n, true, j);
  detail::check_terminating(neg_n, false, 0);

  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

/// Exact rational evaluation of the same terminating series.
inline Rational hyp2f1_terminating(int neg_n, const Rational& b, const Rational& c, const Rational& z) {
  const int n = -neg_n;
  for (int j = 0; j < n; ++j)
    if (c + j == 0) detail::check_terminating(neg_n, true, j);
  detail::check_terminating(neg_n, false, 0);

  Rational term = 1;
  Rational sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= Rational(k - n) * (b + k) / ((c + k) * Rational(k + 1)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace selfrwa::specfun
