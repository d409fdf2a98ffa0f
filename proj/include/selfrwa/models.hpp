#pragma once

// The cosine (Mathieu) and Morse models: closed-form self-RWA levels, their
// second-order expansions, numerically exact references, and error sweeps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "selfrwa/eigen.hpp"
#include "selfrwa/errors.hpp"
#include "selfrwa/fock.hpp"
#include "selfrwa/ladder.hpp"
#include "selfrwa/matrix.hpp"
#include "selfrwa/potential.hpp"
#include "selfrwa/specfun.hpp"

namespace selfrwa {

/// H = p^2/2 - g0^2 cos(q x); self-oscillator frequency g0 q.
struct CosineParams {
  double g0 = 1.0;
  double q = 1.0;

  static CosineParams from_g0sq(double g0sq, double q) {
    if (!(g0sq >= 0.0)) throw InvalidArgument("CosineParams: g0^2 must be >= 0");
    return {std::sqrt(g0sq), q};
  }
  double omega() const noexcept { return g0 * q; }
  void validate() const {
    if (!(g0 >= 0.0) || !std::isfinite(g0)) throw InvalidArgument("CosineParams: g0 must be >= 0");
    if (!(q > 0.0) || !std::isfinite(q)) throw InvalidArgument("CosineParams: q must be > 0");
  }
  void require_oscillator() const {
    validate();
    if (g0 == 0.0) throw NoSelfOscillator("cosine model with g0 = 0 has no self-oscillator");
  }
};

/// H = p^2/2 + lam^2 (1 - exp(-alpha (x - b)))^2; self-oscillator frequency sqrt(2) lam alpha.
struct MorseParams {
  double lam = 1.0;
  double alpha = 1.0;
  double b = 0.0;

  double omega() const noexcept { return std::numbers::sqrt2 * lam * alpha; }
  void validate() const {
    if (!(lam > 0.0) || !std::isfinite(lam)) throw InvalidArgument("MorseParams: lambda must be > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("MorseParams: alpha must be > 0");
    if (!std::isfinite(b)) throw InvalidArgument("MorseParams: b must be finite");
  }
  /// Index of the highest bound level, floor(sqrt(2) lam/alpha - 1/2); -1 if none.
  int n_max() const {
    validate();
    return static_cast<int>(std::floor(std::numbers::sqrt2 * lam / alpha - 0.5));
  }
};

enum class Expansion { printed, derivation };
enum class MorseVariant { full, printed, derivation };

inline const char* to_string(Expansion v) { return v == Expansion::printed ? "printed" : "derivation"; }
inline const char* to_string(MorseVariant v) {
  switch (v) {
    case MorseVariant::full:
      return "full";
    case MorseVariant::printed:
      return "printed";
    case MorseVariant::derivation:
      return "derivation";
  }
  return "?";
}

struct SpectrumTable {
  std::vector<double> levels;
  std::size_t dim = 0;
  bool converged = false;
  double max_shift = 0.0;  ///< largest level change between dim and dim - 64
};

// ---------------------------------------------------------------- cosine

/// (g0 q/2)(n + 1/2) - g0^2 e^{-q/(4 g0)} L_n(q/(2 g0))
inline double cosine_rwa_energy(const CosineParams& p, int n) {
  p.require_oscillator();
  if (n < 0) throw InvalidArgument("cosine_rwa_energy: n must be >= 0");
  const double g0sq = p.g0 * p.g0;
  return 0.5 * p.omega() * (n + 0.5) - g0sq * std::exp(-p.q / (4.0 * p.g0)) * specfun::laguerre(n, p.q / (2.0 * p.g0));
}

/// Second order in q/g0. Both variants evaluate g0 q (n+1/2) - (q^2/16)(n^2+n+1/2) - g0^2:
/// the printed formula already is the expansion of cosine_rwa_energy.
inline double cosine_rwa_second_order(const CosineParams& p, int n, Expansion variant) {
  if (!(p.g0 >= 0.0) || !(p.q >= 0.0)) throw InvalidArgument("cosine_rwa_second_order: need g0 >= 0, q >= 0");
  if (n < 0) throw InvalidArgument("cosine_rwa_second_order: n must be >= 0");
  (void)variant;
  const double nn = static_cast<double>(n);
  return p.omega() * (nn + 0.5) - p.q * p.q / 16.0 * (nn * nn + nn + 0.5) - p.g0 * p.g0;
}

/// Lowest eigenvalues of p^2/2 + V(x) in the Fock basis of frequency omega.
/// The kinetic term is the exact projection of p^2/2; V is applied through
/// the spectral decomposition of the truncated x operator.
inline std::vector<double> fock_hamiltonian_levels(std::size_t dim, double omega, double shift,
                                                   const std::function<double(double)>& v, std::size_t n_levels) {
  const LadderRep ladder(dim, omega);
  const auto& x = ladder.x_op();
  std::vector<double> xd(dim, 0.0), xe(dim - 1);
  for (std::size_t i = 0; i + 1 < dim; ++i) xe[i] = x(i, i + 1);
  const EigenResult xs = symtridiag_eigen(xd, xe, Vectors::full);
  const auto& q = *xs.vectors;

  std::vector<double> fv(dim);
  for (std::size_t k = 0; k < dim; ++k) fv[k] = v(shift + xs.values[k]);

  // H_ij = sum_k Q_ik f_k Q_jk, filled on the lower triangle.
  SymmetricMatrix h(dim);
  std::vector<double> scaled(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) scaled[k] = q(i, k) * fv[k];
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      const double* qj = &q(j, 0);
      for (std::size_t k = 0; k < dim; ++k) s += scaled[k] * qj[k];
      h(i, j) = s;
    }
  }

  const double quarter = 0.25 * omega;
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) += quarter * (2.0 * i + 1.0);
    if (i + 2 < dim) h(i + 2, i) -= quarter * std::sqrt((i + 1.0) * (i + 2.0));
  }
  auto values = sym_eigen(h).values;
  values.resize(std::min(n_levels, values.size()));
  return values;
}

namespace detail {

inline SpectrumTable converged_spectrum(std::size_t dim, double omega, double shift,
                                        const std::function<double(double)>& v, std::size_t n_levels) {
  SpectrumTable t;
  t.dim = dim;
  t.levels = fock_hamiltonian_levels(dim, omega, shift, v, n_levels);
  const auto coarse = fock_hamiltonian_levels(dim - 64, omega, shift, v, n_levels);
  for (std::size_t i = 0; i < n_levels; ++i) t.max_shift = std::max(t.max_shift, std::abs(t.levels[i] - coarse[i]));
  t.converged = t.max_shift <= 1e-6;
  return t;
}

}  // namespace detail

/// Lowest n_levels eigenvalues of p^2/2 - g0^2 cos(q x) in the g0 q Fock
/// basis. A deep lattice holds many wells inside the basis, so the low
/// levels are near-degenerate copies of the lowest band.
inline SpectrumTable cosine_numeric_fock(const CosineParams& p, std::size_t dim, std::size_t n_levels) {
  p.require_oscillator();
  if (dim < 64 + 2) throw InvalidArgument("cosine_numeric_fock: dim must be >= 66");
  if (n_levels < 1 || n_levels > dim / 4) throw InvalidArgument("cosine_numeric_fock: need 1 <= n_levels <= dim/4");
  const double g0sq = p.g0 * p.g0, q = p.q;
  return detail::converged_spectrum(dim, p.omega(), 0.0, [g0sq, q](double x) { return -g0sq * std::cos(q * x); },
                                    n_levels);
}

/// Bloch eigenvalues at quasimomentum k: plane waves e^{i(k + m q)x},
/// m = -m_max..m_max; diagonal (k + m q)^2/2, off-diagonal -g0^2/2.
inline std::vector<double> bloch_energies(const CosineParams& p, double k, int n_bands, int m_max) {
  p.validate();
  if (m_max < 0 || n_bands < 1 || n_bands > 2 * m_max + 1)
    throw InvalidArgument("bloch_energies: need 1 <= n_bands <= 2 m_max + 1");
  const std::size_t size = 2 * static_cast<std::size_t>(m_max) + 1;
  std::vector<double> d(size), e(size - 1, -0.5 * p.g0 * p.g0);
  for (std::size_t i = 0; i < size; ++i) {
    const double kk = k + (static_cast<double>(i) - m_max) * p.q;
    d[i] = 0.5 * kk * kk;
  }
  auto values = symtridiag_eigen(d, e).values;
  values.resize(static_cast<std::size_t>(n_bands));
  return values;
}

struct BandStructure {
  std::vector<double> k_grid;
  std::vector<std::vector<double>> energies;  ///< energies[n][ik]
  double g0 = 0.0;
  double q = 0.0;
  int m_max = 0;
  bool cutoff_warning = false;
  double cutoff_shift = 0.0;  ///< top-band change when m_max grows by 8

  double width(std::size_t n) const {
    const auto [lo, hi] = std::minmax_element(energies.at(n).begin(), energies.at(n).end());
    return *hi - *lo;
  }
};

inline std::vector<double> brillouin_grid(double q, int k_points) {
  std::vector<double> k(static_cast<std::size_t>(k_points));
  for (int i = 0; i < k_points; ++i) k[i] = -0.5 * q + q * i / (k_points - 1.0);
  k.back() = 0.5 * q;
  return k;
}

inline BandStructure mathieu_bands(const CosineParams& p, int k_points, int n_bands, int m_max) {
  p.validate();
  if (k_points < 2) throw InvalidArgument("mathieu_bands: k_points must be >= 2");
  if (n_bands < 1) throw InvalidArgument("mathieu_bands: n_bands must be >= 1");
  if (m_max < n_bands + 8) throw InvalidArgument("mathieu_bands: m_max must be >= n_bands + 8");

  BandStructure bs;
  bs.g0 = p.g0;
  bs.q = p.q;
  bs.m_max = m_max;
  bs.k_grid = brillouin_grid(p.q, k_points);
  bs.energies.assign(static_cast<std::size_t>(n_bands), std::vector<double>(bs.k_grid.size()));
  for (std::size_t ik = 0; ik < bs.k_grid.size(); ++ik) {
    const auto e = bloch_energies(p, bs.k_grid[ik], n_bands, m_max);
    const auto wider = bloch_energies(p, bs.k_grid[ik], n_bands, m_max + 8);
    for (int n = 0; n < n_bands; ++n) bs.energies[n][ik] = e[n];
    bs.cutoff_shift = std::max(bs.cutoff_shift, std::abs(e.back() - wider.back()));
  }
  bs.cutoff_warning = bs.cutoff_shift > 1e-8;
  return bs;
}

/// -sum_k g_k^2 cos(q_k x) with omega = sqrt(sum_k g_k^2 q_k^2).
inline double superlattice_rwa_energy(const std::vector<potentials::CosineComponent>& parts, int n) {
  if (parts.empty()) throw InvalidArgument("superlattice_rwa_energy: no components");
  if (n < 0) throw InvalidArgument("superlattice_rwa_energy: n must be >= 0");
  double w2 = 0.0;
  for (const auto& c : parts) w2 += c.g * c.g * c.q * c.q;
  if (!(w2 > 0.0)) throw InvalidArgument("superlattice_rwa_energy: sum g^2 q^2 must be > 0");
  const double omega = std::sqrt(w2);
  double e = 0.5 * omega * (n + 0.5);
  for (const auto& c : parts) {
    const double q2 = c.q * c.q;
    e -= c.g * c.g * std::exp(-q2 / (4.0 * omega)) * specfun::laguerre(n, q2 / (2.0 * omega));
  }
  return e;
}

// ----------------------------------------------------------------- Morse

inline void check_bound(const MorseParams& p, int n, const char* who) {
  if (n < 0) throw InvalidArgument(std::string(who) + ": n must be >= 0");
  const int top = p.n_max();
  if (n > top) throw UnboundLevel(std::string(who) + ": level above the dissociation limit", n, top);
}

/// sqrt(2) lam alpha (n + 1/2) - (alpha^2/2)(n + 1/2)^2
inline double morse_exact(const MorseParams& p, int n) {
  check_bound(p, n, "morse_exact");
  const double h = n + 0.5;
  return p.omega() * h - 0.5 * p.alpha * p.alpha * h * h;
}

inline double morse_rwa_full(const MorseParams& p, int n) {
  p.validate();
  if (n < 0) throw InvalidArgument("morse_rwa_full: n must be >= 0");
  const double l2 = p.lam * p.lam, r = p.alpha / (std::numbers::sqrt2 * p.lam);
  return 0.5 * p.omega() * (n + 0.5) + l2 * std::exp(r) * specfun::laguerre(n, -2.0 * r) -
         2.0 * l2 * std::exp(0.25 * r) * specfun::laguerre(n, -0.5 * r) + l2;
}

/// printed: (3/4) sqrt(2) lam alpha (n+1/2) + (7 alpha^2/16)(n^2+n+1/2);
/// derivation: the same with prefactor 1, which is what expanding
/// morse_rwa_full gives.
inline double morse_rwa_second_order(const MorseParams& p, int n, Expansion variant) {
  if (!(p.lam > 0.0)) throw InvalidArgument("morse_rwa_second_order: lambda must be > 0");
  if (!(p.alpha >= 0.0)) throw InvalidArgument("morse_rwa_second_order: alpha must be >= 0");
  if (n < 0) throw InvalidArgument("morse_rwa_second_order: n must be >= 0");
  const double pref = variant == Expansion::printed ? 0.75 : 1.0;
  const double nn = static_cast<double>(n);
  return pref * p.omega() * (nn + 0.5) + 7.0 * p.alpha * p.alpha / 16.0 * (nn * nn + nn + 0.5);
}

inline double morse_rwa(const MorseParams& p, int n, MorseVariant variant) {
  switch (variant) {
    case MorseVariant::full:
      return morse_rwa_full(p, n);
    case MorseVariant::printed:
      return morse_rwa_second_order(p, n, Expansion::printed);
    case MorseVariant::derivation:
      return morse_rwa_second_order(p, n, Expansion::derivation);
  }
  throw InvalidArgument("morse_rwa: unknown variant");
}

/// Lowest n_levels Morse levels from a Fock basis of frequency sqrt(2) lam
/// alpha centred on the minimum at b.
inline SpectrumTable morse_numeric_fock(const MorseParams& p, std::size_t dim, std::size_t n_levels) {
  p.validate();
  if (dim < 256) throw InvalidArgument("morse_numeric_fock: dim must be >= 256");
  if (n_levels < 1) throw InvalidArgument("morse_numeric_fock: n_levels must be >= 1");
  check_bound(p, static_cast<int>(n_levels) - 1, "morse_numeric_fock");
  const auto v = potentials::morse(p.lam, p.alpha, p.b);
  return detail::converged_spectrum(dim, p.omega(), p.b, [&v](double x) { return v.value_at(x); }, n_levels);
}

/// 1 + cosh(2 alpha x) - 2 cosh(alpha x)
inline double morse_veff(double alpha, double x) {
  return 1.0 + std::cosh(2.0 * alpha * x) - 2.0 * std::cosh(alpha * x);
}

inline double morse_veff_normalized(double alpha, double x) {
  const double norm = morse_veff(alpha, 1.0);
  if (norm == 0.0 || !std::isfinite(norm))
    throw DegenerateNormalization("morse_veff_normalized: V_eff(1) = 0 at alpha = " + std::to_string(alpha));
  return morse_veff(alpha, x) / norm;
}

// ---------------------------------------------------------- error sweeps

struct ErrorRow {
  int n = 0;
  double parameter = 0.0;
  double approx = 0.0;
  double reference = 0.0;
  double error = 0.0;
};

struct ErrorTable {
  std::string parameter_name;
  bool relative = false;
  std::vector<ErrorRow> rows;
};

/// Reference energies E_n(k = 0) for the cosine model from (dim - 1)/2
/// plane waves on each side.
inline std::vector<double> cosine_reference_levels(const CosineParams& p, int n_max, std::size_t dim) {
  if (dim < 2 * static_cast<std::size_t>(n_max) + 3) throw InvalidArgument("cosine reference: dim too small");
  return bloch_energies(p, 0.0, n_max + 1, static_cast<int>((dim - 1) / 2));
}

inline std::vector<ErrorRow> cosine_error_point(double q, double g0sq, int n_max, std::size_t dim) {
  const auto p = CosineParams::from_g0sq(g0sq, q);
  p.require_oscillator();
  const auto ref = cosine_reference_levels(p, n_max, dim);
  std::vector<ErrorRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    const double e = cosine_rwa_energy(p, n);
    rows.push_back({n, g0sq, e, ref[n], std::abs(e - ref[n])});
  }
  return rows;
}

/// delta_E(n, g0^2) = |E_n^RWA - E_n|, rows ordered by grid index then n.
inline ErrorTable error_sweep_cosine(double q, const std::vector<double>& g0sq_grid, int n_max, std::size_t dim) {
  if (g0sq_grid.empty()) throw InvalidArgument("error_sweep_cosine: empty grid");
  if (n_max < 0 || n_max > 8) throw InvalidArgument("error_sweep_cosine: n_max must be in [0, 8]");
  ErrorTable t{"g0sq", false, {}};
  for (double g : g0sq_grid) {
    const auto rows = cosine_error_point(q, g, n_max, dim);
    t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  }
  return t;
}

inline ErrorRow morse_error_point(double alpha, double lam, int n, MorseVariant variant) {
  const MorseParams p{lam, alpha, 0.0};
  const double exact = morse_exact(p, n);
  const double e = morse_rwa(p, n, variant);
  return {n, lam, e, exact, std::abs(e - exact) / exact};
}

/// Delta_E(n, lam) = |E^RWA - E_exact| / E_exact, rows ordered by grid index then n.
inline ErrorTable error_sweep_morse(double alpha, const std::vector<double>& lambda_grid, int n_max,
                                    MorseVariant variant) {
  if (lambda_grid.empty()) throw InvalidArgument("error_sweep_morse: empty grid");
  if (n_max < 0) throw InvalidArgument("error_sweep_morse: n_max must be >= 0");
  for (double lam : lambda_grid) check_bound(MorseParams{lam, alpha, 0.0}, n_max, "error_sweep_morse");
  ErrorTable t{"lambda", true, {}};
  for (double lam : lambda_grid)
    for (int n = 0; n <= n_max; ++n) t.rows.push_back(morse_error_point(alpha, lam, n, variant));
  return t;
}

inline std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidArgument("linear_grid: steps must be >= 1");
  if (steps == 1) return {lo};
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) g[i] = lo + (hi - lo) * i / (steps - 1.0);
  g.back() = hi;
  return g;
}

}  // namespace selfrwa
