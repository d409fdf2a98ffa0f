#include <cmath>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "selfrwa/identities.hpp"

using Catch::Approx;
using namespace selfrwa;

namespace {

// <n|exp(-a x^2)|n> = (1+a)^(-1/2) 2F1(-n, 1/2; 1; 2a/(1+a))
double gaussian_diag_hyp(int n, double a) {
  return specfun::hyp2f1_terminating(-n, 0.5, 1.0, 2.0 * a / (1.0 + a)) / std::sqrt(1.0 + a);
}

}  // namespace

TEST_CASE("identity_cosine examples", "[identities]") {
  for (double q : {0.3, 1.0, 7.0}) {
    const auto r = identity_cosine(0, q);
    CHECK(r.lhs_sum == 1.0);
    CHECK(*r.rhs_closed == 1.0);
  }
  const auto r1 = identity_cosine(1, 1.0);
  CHECK(r1.lhs_sum == Approx(0.5).margin(1e-15));
  CHECK(*r1.rhs_closed == Approx(0.5).margin(1e-15));
  const auto r10 = identity_cosine(10, 2.0);
  CHECK(std::abs(r10.lhs_sum - *r10.rhs_closed) <= 1e-10);
  CHECK(r10.status == IdentityStatus::confirmed);
  CHECK_THROWS_AS(identity_cosine(31, 1.0), InvalidArgument);
}

TEST_CASE("identity_cosine confirms over the whole grid", "[identities][property]") {
  for (double q : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 25; ++n) {
      const auto r = identity_cosine(n, q);
      INFO(r.parameters);
      CHECK(r.status == IdentityStatus::confirmed);
      CHECK(std::abs(r.lhs_sum - *r.rhs_closed) <= 1e-10);
      CHECK(r.abs_diff_lhs_quad <= 1e-10);
    }
}

TEST_CASE("identity_gaussian examples", "[identities]") {
  const auto r0 = identity_gaussian(0, 1.0);
  CHECK(r0.lhs_sum == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r0.quad_oracle == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK_FALSE(r0.rhs_closed.has_value());
  CHECK(r0.status == IdentityStatus::confirmed);

  CHECK(identity_gaussian(0, 1e-12).lhs_sum == Approx(1.0).epsilon(1e-11));

  const auto r2 = identity_gaussian(2, 1.0);
  CHECK(r2.abs_diff_lhs_quad <= 1e-8);
  REQUIRE(r2.rhs_closed.has_value());
  CHECK(*r2.abs_diff_rhs_quad > 1e-3);
  CHECK(r2.status == IdentityStatus::paper_formula_discrepant);
  CHECK_FALSE(r2.note.empty());

  CHECK_FALSE(identity_gaussian(3, -0.5).rhs_closed.has_value());
  CHECK_THROWS_AS(identity_gaussian(2, -1.0), InvalidArgument);
  CHECK_THROWS_AS(identity_gaussian(21, 0.5), InvalidArgument);
}

TEST_CASE("identity_gaussian agrees with the hypergeometric form", "[identities][property]") {
  for (double a2 : {-0.5, 0.25, 0.5, 1.0, 2.0})
    for (int n = 0; n <= 20; ++n) {
      const auto r = identity_gaussian(n, a2);
      const double ref = gaussian_diag_hyp(n, a2);
      const double scale = std::max(1.0, std::abs(ref));
      INFO(r.parameters);
      CHECK(r.status != IdentityStatus::failed);
      CHECK(std::abs(r.lhs_sum - ref) <= 1e-8 * scale);
      CHECK(std::abs(r.quad_oracle - ref) <= 1e-8 * scale);
    }
}

TEST_CASE("as-printed Gaussian derivatives are detected", "[identities]") {
  const auto r = identity_gaussian(0, 1.0, Derivatives::as_printed);
  CHECK(r.abs_diff_lhs_quad > 0.1);
  CHECK(r.status == IdentityStatus::paper_formula_discrepant);
}

TEST_CASE("identity_hermite examples", "[identities]") {
  for (int n = 0; n <= 6; ++n) CHECK(identity_hermite(n, 0).lhs_sum == Approx(1.0).epsilon(1e-14));
  const auto r21 = identity_hermite(2, 1);
  CHECK(r21.lhs_sum == Approx(8.0).epsilon(1e-14));
  CHECK(r21.quad_oracle == Approx(8.0).epsilon(1e-12));
  const auto r32 = identity_hermite(3, 2);
  CHECK(*r32.rhs_closed == 144.0);
  CHECK(std::abs(r32.quad_oracle - 144.0) <= 1e-8 * 144.0);
  CHECK(r32.status == IdentityStatus::confirmed);
  CHECK(identity_hermite(2, 3).lhs_sum == 0.0);
  CHECK(identity_hermite(2, 3).status == IdentityStatus::confirmed);
  CHECK(hermite_closed_form(4, 5) == 0.0);
  CHECK(hermite_closed_form_as_printed(3, 3) == std::nullopt);
  CHECK(identity_hermite(2, 1, Derivatives::as_printed).status == IdentityStatus::paper_formula_discrepant);
}

TEST_CASE("identity_hermite closed form holds for m <= n <= 20", "[identities][property]") {
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto r = identity_hermite(n, m);
      INFO(r.parameters);
      CHECK(r.status == IdentityStatus::confirmed);
    }
}

TEST_CASE("check_sumintrel", "[identities]") {
  for (int n = 0; n <= 10; ++n) {
    const auto r = check_sumintrel(potentials::constant(1.0), n);
    CHECK(r.lhs_sum == 1.0);
    CHECK(r.quad_oracle == Approx(1.0).epsilon(1e-12));
  }
  CHECK(check_sumintrel(potentials::cosine(1.0, 1.0), 4).abs_diff_lhs_quad <= 1e-9);
  const auto r = check_sumintrel(potentials::monomial(4), 3);
  CHECK(r.lhs_sum == Approx(18.75).epsilon(1e-15));
  CHECK(r.quad_oracle == Approx(18.75).epsilon(1e-12));
}

TEST_CASE("status follows the tolerance rule", "[identities][property]") {
  const auto reports = run_identity_suite();
  CHECK(suite_passed(reports));
  for (const auto& r : reports) {
    const double scale = std::max(1.0, std::abs(r.quad_oracle));
    const bool within = r.abs_diff_lhs_quad <= r.tolerance * scale &&
                        (!r.abs_diff_rhs_quad || *r.abs_diff_rhs_quad <= r.tolerance * scale);
    INFO(r.name << ' ' << r.parameters);
    CHECK((r.status == IdentityStatus::confirmed) == within);
  }
  std::ostringstream os;
  write_identity_text(os, reports);
  CHECK(os.str().find("failed 0") != std::string::npos);
}
