#pragma once

// Cross-oracle invariants that a correct build must satisfy. Each check pits
// two independent routes to the same number against each other and reports
// the worst deviation it saw.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "selfrwa/commands.hpp"
#include "selfrwa/csv.hpp"
#include "selfrwa/fock.hpp"
#include "selfrwa/identities.hpp"
#include "selfrwa/models.hpp"
#include "selfrwa/ordering.hpp"

namespace selfrwa {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double limit = 0.0;
  std::string detail;
};

namespace detail {

// (x^k)_{NN} with x = a + a_dag in the unnormalized basis |n) = sqrt(n!)|n>,
// where a_dag|n) = |n+1) and a|n) = n|n-1): integral arithmetic throughout.
inline BigInt integer_power_diagonal(int k, int N) {
  const int dim = N + k + 2;
  std::vector<BigInt> v(dim, 0);
  v[N] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(dim, 0);
    for (int i = 0; i < dim; ++i) {
      if (v[i] == 0) continue;
      if (i + 1 < dim) next[i + 1] += v[i];
      if (i > 0) next[i - 1] += i * v[i];
    }
    v.swap(next);
  }
  return v[N];
}

inline CheckResult bounded(std::string name, double measured, double limit, std::string detail = {}) {
  return {std::move(name), measured <= limit, measured, limit, std::move(detail)};
}

}  // namespace detail

inline CheckResult check_ordering_oracle() {
  int mismatches = 0;
  for (int k = 0; k <= 10; ++k)
    for (int N = 0; N <= 12; ++N)
      if (diag_power_expectation(k, N) != Rational(detail::integer_power_diagonal(k, N))) ++mismatches;
  return detail::bounded("ordering: <N|(a+a_dag)^k|N> vs integer matrix powers, k<=10 N<=12", mismatches, 0.0);
}

inline CheckResult check_engine_quadrature() {
  double worst = 0.0;
  for (double omega : {0.5, 1.0, std::sqrt(10.0)}) {
    std::vector<TaylorPotential> vs{potentials::cosine(1.0, 0.5), potentials::cosine(1.0, 1.0),
                                    potentials::cosine(1.0, 2.0), potentials::morse_even_part(1.0, 0.5),
                                    potentials::hyperbolic_cosine(1.0, 0.5)};
    for (const auto& v : vs)
      for (int n = 0; n <= 12; ++n)
        worst = std::max(worst, std::abs(fock_diagonal(v, omega, n) - fock_diagonal_oracle(v, omega, n, 200)));
    const int gauss_nmax = omega > 1.0 ? 12 : (omega == 1.0 ? 5 : 1);
    const SeriesOptions wynn{.summation = omega > 1.0 ? Summation::plain : Summation::wynn};
    for (int n = 0; n <= gauss_nmax; ++n) {
      const auto g = potentials::gaussian(1.0);
      worst = std::max(worst, std::abs(fock_diagonal(g, omega, n, wynn) - fock_diagonal_oracle(g, omega, n, 200)));
    }
  }
  return detail::bounded("engine: series diagonal vs Gauss-Hermite quadrature", worst, 1e-8);
}

inline CheckResult check_perturbation_identity() {
  const double g0sq = 10.0, q = 1.0, omega = std::sqrt(g0sq) * q;
  const auto v = potentials::cosine(-g0sq, q);
  const auto perturbation = v - potentials::harmonic(omega);
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const double pt = omega * (n + 0.5) + fock_diagonal_oracle(perturbation, omega, n, 120);
    worst = std::max(worst, std::abs(rwa_energy(v, n) - pt));
  }
  return detail::bounded("rwa: self-RWA vs first-order perturbation theory, cosine g0^2=10", worst, 1e-9);
}

inline CheckResult check_cosine_closed_form() {
  double worst = 0.0;
  for (double g0sq : {2.0, 10.0, 40.0}) {
    const auto p = CosineParams::from_g0sq(g0sq, 1.0);
    const auto v = potentials::cosine(-g0sq, 1.0);
    for (int n = 0; n <= 8; ++n) {
      const double e = cosine_rwa_energy(p, n);
      worst = std::max(worst, std::abs(e - rwa_energy(v, n)) / std::max(1.0, std::abs(e)));
    }
  }
  return detail::bounded("cosine: Laguerre closed form vs generic engine", worst, 1e-9);
}

inline CheckResult check_morse_closed_form() {
  double worst = 0.0;
  for (double lam : {5.0, 10.0, 20.0}) {
    const MorseParams p{lam, 1.0, 0.0};
    for (int n = 0; n <= 5; ++n)
      worst = std::max(worst, std::abs(morse_rwa_full(p, n) - rwa_energy(potentials::morse(lam, 1.0), n)));
  }
  return detail::bounded("morse: Laguerre closed form vs generic engine", worst, 1e-9);
}

inline CheckResult check_free_bands() {
  const int kpoints = 41, nb = 6;
  const double q = 1.3;
  const auto bs = mathieu_bands(CosineParams{0.0, q}, kpoints, nb, 20);
  double worst = 0.0;
  for (std::size_t ik = 0; ik < bs.k_grid.size(); ++ik) {
    std::vector<double> folded;
    for (int m = -10; m <= 10; ++m) folded.push_back(0.5 * std::pow(bs.k_grid[ik] + m * q, 2));
    std::sort(folded.begin(), folded.end());
    for (int n = 0; n < nb; ++n) worst = std::max(worst, std::abs(bs.energies[n][ik] - folded[n]));
  }
  return detail::bounded("bands: g0=0 equals folded free-particle parabolas", worst, 1e-12);
}

inline CheckResult check_band_flatness() {
  const auto bs = mathieu_bands(CosineParams::from_g0sq(10.0, 1.0), 101, 6, 40);
  const double ratio = bs.width(0) / bs.width(5);
  return detail::bounded("bands: width(0)/width(5) at g0^2=10 q=1", ratio, 0.01);
}

inline CheckResult check_cosine_reference() {
  const auto rows = cosine_error_point(1.0, 10.0, 5, 765);
  const bool ordered = rows[0].error < rows[5].error;
  auto r = detail::bounded("cosine: delta_E(0) vs Bloch reference at g0^2=10", rows[0].error, 5e-3,
                           ordered ? "" : "delta_E(0) >= delta_E(5)");
  r.passed = r.passed && ordered;
  return r;
}

inline CheckResult check_morse_numeric() {
  const MorseParams p{10.0, 1.0, 0.0};
  const auto t = morse_numeric_fock(p, 300, 4);
  double worst = 0.0;
  for (int n = 0; n <= 3; ++n) worst = std::max(worst, std::abs(t.levels[n] - morse_exact(p, n)));
  return detail::bounded("morse: Fock diagonalization vs exact levels, n<=3", worst, 1e-4);
}

/// |full - derivation| falls like alpha^3/lambda, so doubling lambda halves it.
inline CheckResult check_morse_residue_scaling() {
  const auto residue = [](double lam) {
    const MorseParams p{lam, 1.0, 0.0};
    return std::abs(morse_rwa_full(p, 0) - morse_rwa_second_order(p, 0, Expansion::derivation));
  };
  double lo = 1e300, hi = 0.0;
  for (double lam : {10.0, 20.0, 40.0}) {
    const double ratio = residue(lam) / residue(2.0 * lam);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const double dev = std::max(std::abs(lo - 2.0), std::abs(hi - 2.0));
  return detail::bounded("morse: full - derivation residue halves when lambda doubles", dev, 0.1,
                         "ratios in [" + csv::format(lo) + ", " + csv::format(hi) + "]");
}

inline CheckResult check_morse_trend() {
  const auto t = error_sweep_morse(1.0, linear_grid(5.0, 40.0, 36), 5, MorseVariant::derivation);
  int violations = 0;
  for (std::size_t i = 6; i < t.rows.size(); ++i)
    if (!(t.rows[i].error < t.rows[i - 6].error)) ++violations;
  return detail::bounded("morse: derivation Delta_E decreasing in lambda on [5, 40]", violations, 0.0);
}

inline CheckResult check_identity_suite() {
  const auto reports = run_identity_suite();
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const IdentityReport& r) { return r.status == IdentityStatus::failed; });
  return detail::bounded("identities: appendix suite has no unexplained failures", static_cast<double>(failed), 0.0,
                         std::to_string(reports.size()) + " identities");
}

inline CheckResult check_csv_round_trip() {
  int bad = 0;
  for (double x : {0.1, 1.0 / 3.0, -8.449303682, 1e-300, 6.02214076e23, std::numbers::pi}) {
    const std::string s = csv::format(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    if (back != x) ++bad;
  }
  return detail::bounded("csv: shortest decimals round-trip exactly", bad, 0.0);
}

inline std::vector<CheckResult> run_selftest() {
  using Fn = CheckResult (*)();
  const Fn checks[] = {check_ordering_oracle,      check_engine_quadrature, check_perturbation_identity,
                       check_cosine_closed_form,   check_morse_closed_form, check_free_bands,
                       check_band_flatness,        check_cosine_reference,  check_morse_numeric,
                       check_morse_residue_scaling, check_morse_trend,      check_identity_suite,
                       check_csv_round_trip};
  std::vector<CheckResult> out;
  for (Fn f : checks) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({"(exception)", false, 0.0, 0.0, e.what()});
    }
  }
  return out;
}

namespace cli {

inline int cmd_selftest(Format format, std::ostream& os) {
  const auto results = run_selftest();
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (format == Format::text) {
    for (const auto& r : results)
      os << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << csv::format(r.measured)
         << " limit=" << csv::format(r.limit) << (r.detail.empty() ? "" : "  " + r.detail) << '\n';
    os << (all ? "selftest passed" : "selftest FAILED") << '\n';
  } else {
    csv::Writer w(os);
    detail::preamble(w, "selftest");
    w.columns({"check", "status", "measured", "limit", "detail"});
    for (const auto& r : results)
      w.row({r.name, std::string(r.passed ? "PASS" : "FAIL"), r.measured, r.limit, r.detail});
  }
  return all ? ok : numerical;
}

}  // namespace cli
}  // namespace selfrwa
