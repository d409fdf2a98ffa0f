#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "selfrwa/errors.hpp"
#include "selfrwa/specfun.hpp"

namespace selfrwa {

/// A potential V(x) that knows its pointwise values and its even Taylor
/// coefficients V^(2m)(0). Odd coefficients are never needed: they drop out
/// of every Fock-diagonal element by parity.
class TaylorPotential {
 public:
  using ValueFn = std::function<double(double)>;
  using EvenCoeffFn = std::function<double(int)>;

  TaylorPotential(std::string label, ValueFn value, EvenCoeffFn even_coeff)
      : label_(std::move(label)), value_(std::move(value)), even_coeff_(std::move(even_coeff)) {}

  const std::string& label() const noexcept { return label_; }
  double value_at(double x) const { return value_(x); }

  /// V^(2m)(0)
  double even_coeff(int m) const {
    if (m < 0) throw InvalidArgument("even_coeff: m must be >= 0");
    return even_coeff_(m);
  }
  double curvature() const { return even_coeff(1); }
  double v0() const { return even_coeff(0); }

  friend TaylorPotential operator+(const TaylorPotential& a, const TaylorPotential& b) {
    return TaylorPotential(
        a.label_ + " + " + b.label_, [va = a.value_, vb = b.value_](double x) { return va(x) + vb(x); },
        [ca = a.even_coeff_, cb = b.even_coeff_](int m) { return ca(m) + cb(m); });
  }
  friend TaylorPotential operator*(double s, const TaylorPotential& a) {
    return TaylorPotential(
        std::to_string(s) + "*(" + a.label_ + ")", [s, va = a.value_](double x) { return s * va(x); },
        [s, ca = a.even_coeff_](int m) { return s * ca(m); });
  }
  friend TaylorPotential operator-(const TaylorPotential& a, const TaylorPotential& b) {
    return a + (-1.0) * b;
  }

 private:
  std::string label_;
  ValueFn value_;
  EvenCoeffFn even_coeff_;
};

namespace potentials {

inline TaylorPotential constant(double c) {
  return {"const", [c](double) { return c; }, [c](int m) { return m == 0 ? c : 0.0; }};
}

/// omega^2 x^2 / 2
inline TaylorPotential harmonic(double omega) {
  const double w2 = omega * omega;
  return {"harmonic", [w2](double x) { return 0.5 * w2 * x * x; },
          [w2](int m) { return m == 1 ? w2 : 0.0; }};
}

/// x^p
inline TaylorPotential monomial(int p) {
  if (p < 0) throw InvalidArgument("monomial: negative power");
  return {"x^" + std::to_string(p), [p](double x) { return std::pow(x, p); },
          [p](int m) { return 2 * m == p ? std::exp(std::lgamma(p + 1.0)) : 0.0; }};
}

/// amplitude * cos(q x)
inline TaylorPotential cosine(double amplitude, double q) {
  return {"cos", [amplitude, q](double x) { return amplitude * std::cos(q * x); },
          [amplitude, q](int m) { return amplitude * (m % 2 ? -1.0 : 1.0) * std::pow(q, 2 * m); }};
}

/// amplitude * cosh(c x)
inline TaylorPotential hyperbolic_cosine(double amplitude, double c) {
  return {"cosh", [amplitude, c](double x) { return amplitude * std::cosh(c * x); },
          [amplitude, c](int m) { return amplitude * std::pow(c, 2 * m); }};
}

/// exp(-alpha_sq x^2); V^(2m)(0) = (-alpha_sq)^m (2m)!/m!.
inline TaylorPotential gaussian(double alpha_sq) {
  return {"gauss", [alpha_sq](double x) { return std::exp(-alpha_sq * x * x); },
          [alpha_sq](int m) {
            if (m == 0) return 1.0;
            if (alpha_sq == 0.0) return 0.0;
            const double mag =
                std::exp(m * std::log(std::abs(alpha_sq)) + std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 1.0));
            const bool negative = (alpha_sq > 0.0) && (m % 2);
            return negative ? -mag : mag;
          }};
}

/// Same values as gaussian(), but with the reciprocal derivative formula
/// (-1)^m alpha^(2m) m!/(2m)! as printed in the appendix. Wrong on purpose:
/// used to demonstrate the discrepancy.
inline TaylorPotential gaussian_as_printed(double alpha_sq) {
  return {"gauss(as-printed derivatives)", [alpha_sq](double x) { return std::exp(-alpha_sq * x * x); },
          [alpha_sq](int m) {
            const double mag = std::pow(std::abs(alpha_sq), m) *
                               std::exp(std::lgamma(m + 1.0) - std::lgamma(2.0 * m + 1.0));
            const bool negative = (m % 2) != (alpha_sq < 0.0 && (m % 2));
            return negative ? -mag : mag;
          }};
}

/// H_{2m}(x); V^(2k)(0) = 2^(2k) (2m)!/(2m-2k)! H_{2m-2k}(0).
inline TaylorPotential hermite_even(int m) {
  if (m < 0) throw InvalidArgument("hermite_even: m must be >= 0");
  return {"H_" + std::to_string(2 * m), [m](double x) { return specfun::hermite(2 * m, x); },
          [m](int k) {
            if (k > m) return 0.0;
            const double ratio = std::exp(std::lgamma(2.0 * m + 1.0) - std::lgamma(2.0 * (m - k) + 1.0));
            return std::ldexp(std::round(ratio), 2 * k) * specfun::hermite_at_zero(2 * (m - k));
          }};
}

/// H_{2m}(x) with the appendix's printed derivative formula
/// 2^(2k) (2m)!/(2k)! H_{2m-2k}(0).
inline TaylorPotential hermite_even_as_printed(int m) {
  if (m < 0) throw InvalidArgument("hermite_even_as_printed: m must be >= 0");
  return {"H_" + std::to_string(2 * m) + "(as-printed derivatives)",
          [m](double x) { return specfun::hermite(2 * m, x); },
          [m](int k) {
            if (k > m) return 0.0;
            const double ratio = std::exp(std::lgamma(2.0 * m + 1.0) - std::lgamma(2.0 * k + 1.0));
            return std::ldexp(std::round(ratio), 2 * k) * specfun::hermite_at_zero(2 * (m - k));
          }};
}

/// lam^2 (1 - exp(-alpha (x - b)))^2 expanded around x = b (the Taylor data
/// refer to the displaced coordinate, so b only moves value_at).
inline TaylorPotential morse(double lam, double alpha, double b = 0.0) {
  const double l2 = lam * lam;
  return {"morse",
          [l2, alpha, b](double x) {
            const double t = 1.0 - std::exp(-alpha * (x - b));
            return l2 * t * t;
          },
          [l2, alpha](int m) {
            if (m == 0) return 0.0;
            return l2 * (std::pow(2.0 * alpha, 2 * m) - 2.0 * std::pow(alpha, 2 * m));
          }};
}

/// Even part of the Morse potential: lam^2 (1 + cosh(2 alpha x) - 2 cosh(alpha x)).
inline TaylorPotential morse_even_part(double lam, double alpha) {
  const double l2 = lam * lam;
  return {"morse-even",
          [l2, alpha](double x) { return l2 * (1.0 + std::cosh(2.0 * alpha * x) - 2.0 * std::cosh(alpha * x)); },
          [l2, alpha](int m) {
            if (m == 0) return 0.0;
            return l2 * (std::pow(2.0 * alpha, 2 * m) - 2.0 * std::pow(alpha, 2 * m));
          }};
}

struct CosineComponent {
  double g;  ///< amplitude is g^2
  double q;
};

/// -sum_k g_k^2 cos(q_k x)
inline TaylorPotential superlattice(const std::vector<CosineComponent>& parts) {
  if (parts.empty()) throw InvalidArgument("superlattice: no components");
  TaylorPotential v = cosine(-parts.front().g * parts.front().g, parts.front().q);
  for (std::size_t i = 1; i < parts.size(); ++i) v = v + cosine(-parts[i].g * parts[i].g, parts[i].q);
  return v;
}

}  // namespace potentials
}  // namespace selfrwa
