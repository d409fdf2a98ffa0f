// selfrwa: CSV data for the self-RWA models and the verification suites.
// Exit codes: 0 ok, 1 usage, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "selfrwa/commands.hpp"
#include "selfrwa/selftest.hpp"

namespace cli = selfrwa::cli;

namespace {

const std::map<std::string, selfrwa::MorseVariant> kVariants{{"full", selfrwa::MorseVariant::full},
                                                              {"printed", selfrwa::MorseVariant::printed},
                                                              {"derivation", selfrwa::MorseVariant::derivation}};
const std::map<std::string, cli::Format> kFormats{{"csv", cli::Format::csv}, {"text", cli::Format::text}};

int emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text << std::flush;
    return cli::ok;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "selfrwa: cannot open " << out << " for writing\n";
    return cli::usage;
  }
  f << text;
  f.close();
  if (!f) {
    std::cerr << "selfrwa: write to " << out << " failed\n";
    return cli::numerical;
  }
  return cli::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-RWA spectra, error sweeps and identity checks as CSV"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  std::string out;
  auto add_out = [&out](CLI::App* sub) {
    sub->add_option("--out", out, "Output file (default: stdout)");
  };

  cli::BandsConfig bands;
  auto* s_bands = app.add_subcommand("bands", "Mathieu band structure E_n(k) in the first Brillouin zone");
  s_bands->add_option("--g0sq", bands.g0sq, "Lattice depth g0^2")->capture_default_str();
  s_bands->add_option("--q", bands.q, "Lattice wave number")->capture_default_str();
  s_bands->add_option("--kpoints", bands.kpoints, "Quasimomentum points")->capture_default_str();
  s_bands->add_option("--bands", bands.bands, "Number of bands")->capture_default_str();
  s_bands->add_option("--mmax", bands.mmax, "Plane waves e^{i(k+mq)x}, |m| <= mmax")->capture_default_str();
  s_bands->add_option("--tol", bands.tol, "Cutoff warning threshold")->capture_default_str();
  add_out(s_bands);

  cli::CosineErrorsConfig cos;
  std::optional<double> cos_g0sq;
  auto* s_cos = app.add_subcommand("cosine-errors", "Absolute error of the cosine RWA against Bloch levels");
  s_cos->add_option("--q", cos.q, "Lattice wave number")->capture_default_str();
  s_cos->add_option("--g0sq", cos_g0sq, "Single lattice depth (overrides the grid)");
  s_cos->add_option("--g0sq-min", cos.g0sq_min, "Grid start")->capture_default_str();
  s_cos->add_option("--g0sq-max", cos.g0sq_max, "Grid end")->capture_default_str();
  s_cos->add_option("--steps", cos.steps, "Grid points")->capture_default_str();
  s_cos->add_option("--nmax", cos.nmax, "Highest level")->capture_default_str();
  s_cos->add_option("--dim", cos.dim, "Reference basis dimension")->capture_default_str();
  add_out(s_cos);

  cli::MorseErrorsConfig morse;
  auto* s_morse = app.add_subcommand("morse-errors", "Relative error of the Morse RWA against exact levels");
  s_morse->add_option("--alpha", morse.alpha, "Morse range parameter")->capture_default_str();
  s_morse->add_option("--lambda-min", morse.lambda_min, "Grid start")->capture_default_str();
  s_morse->add_option("--lambda-max", morse.lambda_max, "Grid end")->capture_default_str();
  s_morse->add_option("--steps", morse.steps, "Grid points")->capture_default_str();
  s_morse->add_option("--nmax", morse.nmax, "Highest level")->capture_default_str();
  s_morse->add_option("--variant", morse.variant, "RWA form: full, derivation or printed")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case))
      ->default_str("full");
  add_out(s_morse);

  cli::VeffConfig veff;
  std::optional<double> veff_alpha;
  auto* s_veff = app.add_subcommand("veff", "Normalized Morse effective potential");
  s_veff->add_option("--alpha", veff_alpha, "Single alpha (default: 0.1, 1, 10)");
  s_veff->add_option("--x-min", veff.x_min, "Grid start")->capture_default_str();
  s_veff->add_option("--x-max", veff.x_max, "Grid end")->capture_default_str();
  s_veff->add_option("--steps", veff.steps, "Grid points")->capture_default_str();
  add_out(s_veff);

  cli::IdentitiesConfig ids;
  auto* s_ids = app.add_subcommand("identities", "Sum-integral identity suite");
  s_ids->add_option("--tol", ids.tol, "Override every identity tolerance");
  s_ids->add_option("--format", ids.format, "csv or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("csv");
  add_out(s_ids);

  cli::Format self_format = cli::Format::text;
  auto* s_self = app.add_subcommand("selftest", "Cross-oracle invariants; pass/fail table");
  s_self->add_option("--format", self_format, "csv or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("text");
  add_out(s_self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::ok : cli::usage;
  }

  std::ostringstream buf;
  int status = cli::ok;
  try {
    if (s_bands->parsed()) {
      status = cli::cmd_bands(bands, buf);
    } else if (s_cos->parsed()) {
      if (cos_g0sq) {
        cos.g0sq_min = cos.g0sq_max = *cos_g0sq;
        cos.steps = 1;
      }
      status = cli::cmd_cosine_errors(cos, buf);
    } else if (s_morse->parsed()) {
      status = cli::cmd_morse_errors(morse, buf);
    } else if (s_veff->parsed()) {
      if (veff_alpha) veff.alphas = {*veff_alpha};
      status = cli::cmd_veff(veff, buf);
    } else if (s_ids->parsed()) {
      status = cli::cmd_identities(ids, buf);
    } else if (s_self->parsed()) {
      status = cli::cmd_selftest(self_format, buf);
    }
  } catch (const selfrwa::InvalidArgument& e) {
    std::cerr << "selfrwa: " << e.what() << "\nRun with --help for usage.\n";
    return cli::usage;
  } catch (const std::exception& e) {
    std::cerr << "selfrwa: numerical failure: " << e.what() << '\n';
    return cli::numerical;
  }

  const int wrote = emit(buf.str(), out);
  return wrote != cli::ok ? wrote : status;
}
