#pragma once

// Exact combinatorics of symmetric (Weyl) vs normal ordering of a, a_dag.

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selfrwa/errors.hpp"

namespace selfrwa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// a_dag^j a^j |N> = N!/(N-j)! |N>; zero once j exceeds N.
inline BigInt falling_factorial(int N, int j) {
  if (N < 0 || j < 0) throw InvalidArgument("falling_factorial: negative argument");
  if (j > N) return 0;
  BigInt f = 1;
  for (int i = 0; i < j; ++i) f *= N - i;
  return f;
}

inline double falling_factorial_real(int N, int j) {
  if (N < 0 || j < 0) throw InvalidArgument("falling_factorial_real: negative argument");
  if (j > N) return 0.0;
  double f = 1.0;
  for (int i = 0; i < j; ++i) f *= N - i;
  return f;
}

struct OrderingTerm {
  int l;           ///< the term is coeff * a_dag^(k-l) a^(k-l)
  Rational coeff;
};

/// :N^k:_W expanded in normal-ordered monomials.
struct OrderingCoeffs {
  int k = 0;
  std::vector<OrderingTerm> terms;  ///< l = 0..k in order

  /// <N| :N^k:_W |N>
  Rational diagonal(int N) const {
    Rational s = 0;
    for (const auto& t : terms) s += t.coeff * falling_factorial(N, k - t.l);
    return s;
  }
};

/// coeff(l) = l!/2^l * C(k,l)^2 for l = 0..k.
inline OrderingCoeffs weyl_to_normal(int k) {
  if (k < 0) throw InvalidArgument("weyl_to_normal: k must be >= 0");
  OrderingCoeffs out;
  out.k = k;
  out.terms.reserve(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    const BigInt c = binomial(k, l);
    Rational coeff(factorial(l) * c * c, BigInt(1) << l);
    out.terms.push_back({l, coeff});
  }
  return out;
}

/// <N|(a_dag + a)^k|N>: only the balanced words survive, which is
/// C(k, k/2) times the Weyl-ordered N^(k/2) for even k and zero for odd k.
inline Rational diag_power_expectation(int k, int N) {
  if (k < 0 || N < 0) throw InvalidArgument("diag_power_expectation: negative argument");
  if (k % 2) return 0;
  const int h = k / 2;
  return Rational(binomial(k, h)) * weyl_to_normal(h).diagonal(N);
}

inline double diag_power_expectation_real(int k, int N) {
  return static_cast<double>(diag_power_expectation(k, N));
}

}  // namespace selfrwa
