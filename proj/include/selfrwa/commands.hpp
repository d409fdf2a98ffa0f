#pragma once

// Subcommand bodies behind the selfrwa tool. Each writes a CSV table with a
// '#' header listing every effective parameter and returns an exit status.
// Bad configuration throws InvalidArgument before anything is written.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "selfrwa/csv.hpp"
#include "selfrwa/errors.hpp"
#include "selfrwa/identities.hpp"
#include "selfrwa/models.hpp"

namespace selfrwa::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { ok = 0, usage = 1, numerical = 2 };

enum class Format { csv, text };

struct BandsConfig {
  double g0sq = 10.0;
  double q = 1.0;
  int kpoints = 101;
  int bands = 6;
  int mmax = 40;
  double tol = 1e-8;  ///< cutoff warning threshold
};

struct CosineErrorsConfig {
  double q = 1.0;
  double g0sq_min = 1.0;
  double g0sq_max = 40.0;
  int steps = 40;
  int nmax = 5;
  int dim = 765;
};

struct MorseErrorsConfig {
  double alpha = 1.0;
  double lambda_min = 2.0;
  double lambda_max = 20.0;
  int steps = 19;
  int nmax = 5;
  MorseVariant variant = MorseVariant::full;
};

struct VeffConfig {
  std::vector<double> alphas{0.1, 1.0, 10.0};
  double x_min = -3.0;
  double x_max = 3.0;
  int steps = 121;
};

struct IdentitiesConfig {
  std::optional<double> tol;
  Format format = Format::csv;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline bool positive(double x) { return x > 0.0 && std::isfinite(x); }

inline void preamble(csv::Writer& w, const char* command) {
  w.comment(std::string("selfrwa ") + kVersion + " " + command);
}

}  // namespace detail

// ------------------------------------------------------------------ bands

inline void validate(const BandsConfig& c) {
  detail::require(c.g0sq >= 0.0 && std::isfinite(c.g0sq), "--g0sq must be >= 0");
  detail::require(detail::positive(c.q), "--q must be > 0");
  detail::require(c.kpoints >= 2, "--kpoints must be >= 2");
  detail::require(c.bands >= 1, "--bands must be >= 1");
  detail::require(c.mmax >= c.bands + 8, "--mmax must be >= bands + 8");
  detail::require(detail::positive(c.tol), "--tol must be > 0");
}

inline int cmd_bands(const BandsConfig& c, std::ostream& os) {
  validate(c);
  const auto bs = mathieu_bands(CosineParams::from_g0sq(c.g0sq, c.q), c.kpoints, c.bands, c.mmax);
  csv::Writer w(os);
  detail::preamble(w, "bands");
  w.parameter("g0sq", c.g0sq);
  w.parameter("q", c.q);
  w.parameter("kpoints", c.kpoints);
  w.parameter("bands", c.bands);
  w.parameter("mmax", c.mmax);
  w.parameter("tol", c.tol);
  if (bs.cutoff_shift > c.tol)
    w.comment("warning: plane-wave cutoff; top band moves by " + csv::format(bs.cutoff_shift) +
              " when mmax grows by 8");
  w.columns({"k", "n", "energy"});
  for (std::size_t ik = 0; ik < bs.k_grid.size(); ++ik)
    for (int n = 0; n < c.bands; ++n) w.row({bs.k_grid[ik], n, bs.energies[n][ik]});
  return ok;
}

// ---------------------------------------------------------- cosine-errors

inline void validate(const CosineErrorsConfig& c) {
  detail::require(detail::positive(c.q), "--q must be > 0");
  detail::require(detail::positive(c.g0sq_min), "--g0sq-min must be > 0");
  detail::require(detail::positive(c.g0sq_max) && c.g0sq_max >= c.g0sq_min, "--g0sq-max must be >= --g0sq-min");
  detail::require(c.steps >= 1, "--steps must be >= 1");
  detail::require(c.nmax >= 0 && c.nmax <= 8, "--nmax must be in [0, 8]");
  detail::require(c.dim >= 2 * c.nmax + 3, "--dim must be >= 2 nmax + 3");
}

inline int cmd_cosine_errors(const CosineErrorsConfig& c, std::ostream& os) {
  validate(c);
  csv::Writer w(os);
  detail::preamble(w, "cosine-errors");
  w.parameter("q", c.q);
  w.parameter("g0sq_min", c.g0sq_min);
  w.parameter("g0sq_max", c.g0sq_max);
  w.parameter("steps", c.steps);
  w.parameter("nmax", c.nmax);
  w.parameter("dim", c.dim);
  w.comment("E_num: Bloch energy at k = 0 from dim plane waves; delta = |E_rwa - E_num|");
  w.columns({"g0sq", "n", "E_rwa", "E_num", "delta"});
  int status = ok;
  for (double g : linear_grid(c.g0sq_min, c.g0sq_max, c.steps)) {
    try {
      for (const auto& r : cosine_error_point(c.q, g, c.nmax, static_cast<std::size_t>(c.dim)))
        w.row({r.parameter, r.n, r.approx, r.reference, r.error});
    } catch (const std::exception& e) {
      w.comment("failed g0sq=" + csv::format(g) + ": " + e.what());
      status = numerical;
    }
  }
  return status;
}

// ----------------------------------------------------------- morse-errors

inline void validate(const MorseErrorsConfig& c) {
  detail::require(detail::positive(c.alpha), "--alpha must be > 0");
  detail::require(detail::positive(c.lambda_min), "--lambda-min must be > 0");
  detail::require(detail::positive(c.lambda_max) && c.lambda_max >= c.lambda_min,
                  "--lambda-max must be >= --lambda-min");
  detail::require(c.steps >= 1, "--steps must be >= 1");
  detail::require(c.nmax >= 0, "--nmax must be >= 0");
}

/// Levels above the dissociation limit are skipped with a comment; they
/// are outside the model, not numerical failures.
inline int cmd_morse_errors(const MorseErrorsConfig& c, std::ostream& os) {
  validate(c);
  csv::Writer w(os);
  detail::preamble(w, "morse-errors");
  w.parameter("alpha", c.alpha);
  w.parameter("lambda_min", c.lambda_min);
  w.parameter("lambda_max", c.lambda_max);
  w.parameter("steps", c.steps);
  w.parameter("nmax", c.nmax);
  w.parameter("variant", to_string(c.variant));
  w.comment("Delta = |E_rwa - E_exact| / E_exact");
  w.columns({"lambda", "n", "E_rwa", "E_exact", "Delta", "variant"});
  int status = ok;
  for (double lam : linear_grid(c.lambda_min, c.lambda_max, c.steps)) {
    for (int n = 0; n <= c.nmax; ++n) {
      try {
        const auto r = morse_error_point(c.alpha, lam, n, c.variant);
        w.row({r.parameter, r.n, r.approx, r.reference, r.error, std::string(to_string(c.variant))});
      } catch (const UnboundLevel& e) {
        w.comment("unbound lambda=" + csv::format(lam) + " n=" + std::to_string(n) +
                  " (highest bound level " + std::to_string(e.max_bound) + ")");
      } catch (const std::exception& e) {
        w.comment("failed lambda=" + csv::format(lam) + " n=" + std::to_string(n) + ": " + e.what());
        status = numerical;
      }
    }
  }
  return status;
}

// ------------------------------------------------------------------- veff

inline void validate(const VeffConfig& c) {
  detail::require(!c.alphas.empty(), "need at least one alpha");
  for (double a : c.alphas) detail::require(detail::positive(a), "--alpha must be > 0");
  detail::require(std::isfinite(c.x_min) && std::isfinite(c.x_max) && c.x_max >= c.x_min, "need x_min <= x_max");
  detail::require(c.steps >= 1, "--steps must be >= 1");
}

/// Rows ordered by x, then alpha in the order given.
inline int cmd_veff(const VeffConfig& c, std::ostream& os) {
  validate(c);
  csv::Writer w(os);
  detail::preamble(w, "veff");
  std::string alphas;
  for (double a : c.alphas) alphas += (alphas.empty() ? "" : ";") + csv::format(a);
  w.parameter("alpha", alphas);
  w.parameter("x_min", c.x_min);
  w.parameter("x_max", c.x_max);
  w.parameter("steps", c.steps);
  w.comment("v_normalized = V_eff(x) / V_eff(1), V_eff = 1 + cosh(2 alpha x) - 2 cosh(alpha x)");

  std::vector<double> norms;
  int status = ok;
  for (double a : c.alphas) {
    const double nv = morse_veff(a, 1.0);
    if (nv == 0.0 || !std::isfinite(nv)) {
      w.comment("failed alpha=" + csv::format(a) + ": V_eff(1) is zero or not finite");
      status = numerical;
    }
    norms.push_back(nv);
  }
  w.columns({"x", "alpha", "v_normalized"});
  for (double x : linear_grid(c.x_min, c.x_max, c.steps))
    for (std::size_t i = 0; i < c.alphas.size(); ++i) {
      if (norms[i] == 0.0 || !std::isfinite(norms[i])) continue;
      w.row({x, c.alphas[i], morse_veff(c.alphas[i], x) / norms[i]});
    }
  return status;
}

// ------------------------------------------------------------- identities

inline int cmd_identities(const IdentitiesConfig& c, std::ostream& os) {
  if (c.tol) detail::require(detail::positive(*c.tol), "--tol must be > 0");
  const auto reports = run_identity_suite(c.tol);
  if (c.format == Format::text) {
    write_identity_text(os, reports);
    return suite_passed(reports) ? ok : numerical;
  }
  csv::Writer w(os);
  detail::preamble(w, "identities");
  w.parameter("tol", c.tol ? csv::format(*c.tol) : std::string("default"));
  w.comment("status: confirmed | paper-formula-discrepant (expected, flagged) | failed");
  w.columns({"identity", "parameters", "lhs_sum", "rhs_closed", "quad_oracle", "abs_diff_lhs_quad",
             "abs_diff_rhs_quad", "tolerance", "status", "note"});
  const auto opt = [](const std::optional<double>& v) -> csv::Field {
    return v ? csv::Field(*v) : csv::Field(std::string());
  };
  for (const auto& r : reports)
    w.row({r.name, r.parameters, r.lhs_sum, opt(r.rhs_closed), r.quad_oracle, r.abs_diff_lhs_quad,
           opt(r.abs_diff_rhs_quad), r.tolerance, std::string(to_string(r.status)), r.note});
  return suite_passed(reports) ? ok : numerical;
}

}  // namespace selfrwa::cli
