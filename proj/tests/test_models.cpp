#include <cmath>
#include <numbers>
#include <numeric>

#include <catch_amalgamated.hpp>

#include "selfrwa/models.hpp"

using Catch::Approx;
using namespace selfrwa;

namespace {

double mean_delta(const ErrorTable& t, double g0sq) {
  double s = 0.0;
  int c = 0;
  for (const auto& r : t.rows)
    if (r.parameter == g0sq) {
      s += r.error;
      ++c;
    }
  return s / c;
}

}  // namespace

TEST_CASE("cosine closed form matches the generic engine", "[models][cosine][property]") {
  for (double g0sq : {5.0, 10.0, 20.0})
    for (double q : {0.5, 1.0, 2.0}) {
      const auto p = CosineParams::from_g0sq(g0sq, q);
      const auto v = potentials::cosine(-g0sq, q);
      for (int n = 0; n <= 8; ++n) {
        INFO("g0sq=" << g0sq << " q=" << q << " n=" << n);
        CHECK(std::abs(cosine_rwa_energy(p, n) - rwa_energy(v, n)) <= 1e-9);
      }
    }
}

TEST_CASE("cosine_rwa_energy examples", "[models][cosine]") {
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  CHECK(cosine_rwa_energy(p, 0) == Approx(-8.449303682).margin(1e-9));
  CHECK(std::abs(cosine_rwa_energy(p, 5) - rwa_energy(potentials::cosine(-10.0, 1.0), 5)) <= 1e-10);
  // Deep-well limit: -g0^2 + omega/2.
  CHECK(cosine_rwa_energy({1.0, 1e-8}, 0) == Approx(-1.0 + 0.5e-8).margin(1e-14));
  CHECK_THROWS_AS(cosine_rwa_energy({0.0, 1.0}, 0), NoSelfOscillator);
  CHECK_THROWS_AS(cosine_rwa_energy({1.0, 0.0}, 0), InvalidArgument);
  CHECK_THROWS_AS(cosine_rwa_energy(p, -1), InvalidArgument);
}

TEST_CASE("cosine second-order expansion", "[models][cosine]") {
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  const double printed = std::sqrt(10.0) * 0.5 - 1.0 / 32.0 - 10.0;
  CHECK(cosine_rwa_second_order(p, 0, Expansion::printed) == Approx(printed).epsilon(1e-15));
  CHECK(cosine_rwa_second_order(p, 0, Expansion::printed) == Approx(-8.4501112).margin(1e-7));
  for (int n = 0; n <= 6; ++n)
    CHECK(cosine_rwa_second_order(p, n, Expansion::derivation) == cosine_rwa_second_order(p, n, Expansion::printed));
  CHECK(cosine_rwa_second_order({std::sqrt(3.0), 0.0}, 2, Expansion::printed) == Approx(-3.0).epsilon(1e-15));
  CHECK(cosine_rwa_second_order({std::sqrt(3.0), 0.0}, 2, Expansion::derivation) == Approx(-3.0).epsilon(1e-15));
}

TEST_CASE("cosine second order is the third-order-accurate expansion of the closed form", "[models][cosine][property]") {
  // Residue against the closed form must shrink 8x per halving of q.
  const double g0 = 3.0;
  for (int n = 0; n <= 4; ++n) {
    double prev = 0.0;
    for (double q : {0.4, 0.2, 0.1, 0.05}) {
      const CosineParams p{g0, q};
      const double r = std::abs(cosine_rwa_energy(p, n) - cosine_rwa_second_order(p, n, Expansion::derivation));
      if (prev > 0.0) {
        INFO("n=" << n << " q=" << q);
        CHECK(prev / r == Approx(8.0).epsilon(0.05));
      }
      prev = r;
    }
  }
}

TEST_CASE("cosine_numeric_fock", "[models][cosine][slow]") {
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  const auto t = cosine_numeric_fock(p, 765, 7);
  REQUIRE(t.levels.size() == 7);
  CHECK(t.dim == 765);
  // The 6th and 7th copies sit in the outermost wells, where the basis edge
  // still moves them by ~5e-6.
  CHECK_FALSE(t.converged);
  CHECK(t.max_shift < 1e-5);
  CHECK(cosine_numeric_fock(p, 765, 5).converged);
  CHECK(t.levels[0] == Approx(-8.4501).margin(2e-3));
  // Deep-lattice asymptotic -g0^2 + g0 q/2 - q^2/32 as a cross-oracle.
  CHECK(std::abs(t.levels[0] - (-10.0 + std::sqrt(10.0) / 2.0 - 1.0 / 32.0)) <= 2e-3);
  for (std::size_t i = 0; i < 6; ++i) CHECK(t.levels[i] < 0.0);
  // Matches the Bloch band bottom: the ground band is flat to ~1e-7.
  CHECK(std::abs(t.levels[0] - bloch_energies(p, 0.0, 1, 40)[0]) <= 1e-6);

  const auto shallow = cosine_numeric_fock(CosineParams::from_g0sq(5.0, 1.0), 128, 4);
  CHECK_FALSE(shallow.converged);
  CHECK(shallow.max_shift > 1e-6);

  CHECK_THROWS_AS(cosine_numeric_fock(p, 40, 4), InvalidArgument);
  CHECK_THROWS_AS(cosine_numeric_fock(p, 128, 33), InvalidArgument);
}

TEST_CASE("cosine_numeric_fock approaches the harmonic spacing", "[models][cosine]") {
  const CosineParams p{20.0, 1.0};
  const auto t = cosine_numeric_fock(p, 200, 4);
  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i)
    CHECK((t.levels[i + 1] - t.levels[i]) / p.omega() == Approx(1.0).margin(0.02));
}

TEST_CASE("free-particle bands", "[models][bands]") {
  const CosineParams p{0.0, 1.0};
  const auto bs = mathieu_bands(p, 21, 4, 20);
  for (std::size_t ik = 0; ik < bs.k_grid.size(); ++ik) {
    const double k = bs.k_grid[ik];
    CHECK(std::abs(bs.energies[0][ik] - 0.5 * k * k) <= 1e-12);
    const double folded = 0.5 * (std::abs(k) - 1.0) * (std::abs(k) - 1.0);
    CHECK(std::abs(bs.energies[1][ik] - folded) <= 1e-12);
  }
  CHECK(std::abs(bs.energies[0].front() - 0.125) <= 1e-12);
  CHECK(std::abs(bs.energies[1].front() - 0.125) <= 1e-12);
  CHECK(std::abs(bs.energies[1].back() - 0.125) <= 1e-12);
  CHECK(bs.k_grid.front() == -0.5);
  CHECK(bs.k_grid.back() == 0.5);
  CHECK_FALSE(bs.cutoff_warning);
}

TEST_CASE("band structure at g0^2 = 10", "[models][bands]") {
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  const auto bs = mathieu_bands(p, 101, 6, 40);
  REQUIRE(bs.energies.size() == 6);
  for (std::size_t ik = 0; ik < 101; ++ik)
    for (std::size_t n = 1; n < 6; ++n) CHECK(bs.energies[n - 1][ik] <= bs.energies[n][ik]);
  CHECK(bs.width(0) < 1e-6);
  CHECK(bs.width(5) > 5e-3);
  CHECK(bs.width(0) * 100.0 < bs.width(5));
  CHECK(bs.energies[0][50] == Approx(-8.45076903).margin(1e-7));
  CHECK(bs.energies[5][50] == Approx(5.17912565).margin(1e-7));
}

TEST_CASE("band symmetry, periodicity and variational bound", "[models][bands][property]") {
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  for (double k : {0.05, 0.17, 0.33, 0.5}) {
    const auto plus = bloch_energies(p, k, 6, 40);
    const auto minus = bloch_energies(p, -k, 6, 40);
    const auto shifted = bloch_energies(p, k - 1.0, 6, 40);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(std::abs(plus[n] - minus[n]) <= 1e-10);
      CHECK(std::abs(plus[n] - shifted[n]) <= 1e-10);
    }
  }
  for (double k : {0.0, 0.21, 0.5}) {
    auto prev = bloch_energies(p, k, 6, 14);
    for (int m = 15; m <= 30; ++m) {
      const auto e = bloch_energies(p, k, 6, m);
      for (std::size_t n = 0; n < 6; ++n) CHECK(e[n] <= prev[n] + 1e-12);
      prev = e;
    }
  }
}

TEST_CASE("band cutoff warning and argument checks", "[models][bands]") {
  const auto deep = mathieu_bands(CosineParams::from_g0sq(400.0, 1.0), 5, 6, 14);
  CHECK(deep.cutoff_warning);
  CHECK(deep.cutoff_shift > 1e-8);
  const auto p = CosineParams::from_g0sq(10.0, 1.0);
  CHECK_THROWS_AS(mathieu_bands(p, 1, 6, 40), InvalidArgument);
  CHECK_THROWS_AS(mathieu_bands(p, 11, 6, 13), InvalidArgument);
  CHECK_THROWS_AS(mathieu_bands({1.0, -1.0}, 11, 6, 40), InvalidArgument);
}

TEST_CASE("superlattice_rwa_energy", "[models][cosine]") {
  const double g = std::sqrt(3.0), q = 1.3;
  for (int n = 0; n <= 5; ++n) {
    CHECK(superlattice_rwa_energy({{g, q}}, n) == Approx(cosine_rwa_energy({g, q}, n)).epsilon(1e-14));
    CHECK(superlattice_rwa_energy({{g, q}, {g, q}}, n) ==
          Approx(cosine_rwa_energy({std::numbers::sqrt2 * g, q}, n)).epsilon(1e-13));
  }
  const std::vector<potentials::CosineComponent> two{{1.0, 1.0}, {1.0, 2.0}};
  for (int n = 0; n <= 4; ++n)
    CHECK(std::abs(superlattice_rwa_energy(two, n) - rwa_energy(potentials::superlattice(two), n)) <= 1e-9);
  CHECK_THROWS_AS(superlattice_rwa_energy({}, 0), InvalidArgument);
  CHECK_THROWS_AS(superlattice_rwa_energy({{0.0, 1.0}}, 0), InvalidArgument);
}

TEST_CASE("morse_exact", "[models][morse]") {
  const MorseParams p{10.0, 1.0, 0.0};
  CHECK(p.n_max() == 13);
  CHECK(morse_exact(p, 0) == Approx(5.0 * std::numbers::sqrt2 - 0.125).epsilon(1e-15));
  CHECK(morse_exact(p, 0) == Approx(6.9460678).margin(1e-7));
  CHECK(morse_exact(p, 1) == Approx(20.0882034).margin(1e-7));
  CHECK(morse_exact(p, 13) < p.lam * p.lam);
  for (double b : {1.0, -3.0})
    for (int n = 0; n <= 13; ++n) CHECK(morse_exact({10.0, 1.0, b}, n) == morse_exact(p, n));
  try {
    (void)morse_exact(p, 14);
    FAIL("expected UnboundLevel");
  } catch (const UnboundLevel& e) {
    CHECK(e.level == 14);
    CHECK(e.max_bound == 13);
  }
  CHECK(MorseParams{2.0, 1.0, 0.0}.n_max() == 2);
  CHECK(MorseParams{0.3, 1.0, 0.0}.n_max() == -1);
  CHECK_THROWS_AS(morse_exact({0.3, 1.0, 0.0}, 0), UnboundLevel);
  CHECK_THROWS_AS(morse_exact({-1.0, 1.0, 0.0}, 0), InvalidArgument);
}

TEST_CASE("morse full RWA matches the generic engine", "[models][morse][property]") {
  for (double lam : {5.0, 10.0, 20.0})
    for (double alpha : {0.5, 1.0}) {
      const MorseParams p{lam, alpha, 0.0};
      const auto v = potentials::morse(lam, alpha);
      for (int n = 0; n <= 8; ++n) {
        INFO("lam=" << lam << " alpha=" << alpha << " n=" << n);
        CHECK(std::abs(morse_rwa_full(p, n) - rwa_energy(v, n)) <= 1e-9 * std::max(1.0, std::abs(rwa_energy(v, n))));
      }
    }
  CHECK(morse_rwa_full({10.0, 1.0, 0.0}, 0) == Approx(7.295631066640482).epsilon(1e-13));
  CHECK(morse_rwa_full({10.0, 1.0, 0.0}, 0) == Approx(7.29565).margin(1e-4));
  CHECK(std::abs(morse_rwa_full({1000.0, 1.0, 0.0}, 0) - (std::numbers::sqrt2 * 500.0 + 7.0 / 32.0)) <= 1e-2);
}

TEST_CASE("morse second-order variants", "[models][morse]") {
  const MorseParams p{10.0, 1.0, 0.0};
  CHECK(morse_rwa_second_order(p, 0, Expansion::printed) == Approx(5.522050858899107).epsilon(1e-14));
  CHECK(morse_rwa_second_order(p, 0, Expansion::derivation) == Approx(7.2898178118654755).epsilon(1e-14));
  CHECK(std::abs(morse_rwa_full(p, 0) - morse_rwa_second_order(p, 0, Expansion::derivation)) ==
        Approx(5.8e-3).margin(1e-4));
  for (int n = 0; n <= 3; ++n) {
    const MorseParams tiny{10.0, 1e-7, 0.0};
    const double w = tiny.omega() * (n + 0.5);
    CHECK(morse_rwa_second_order(tiny, n, Expansion::printed) == Approx(0.75 * w).epsilon(1e-6));
    CHECK(morse_rwa_second_order(tiny, n, Expansion::derivation) == Approx(w).epsilon(1e-6));
    CHECK(morse_rwa_second_order({10.0, 0.0, 0.0}, n, Expansion::derivation) == 0.0);
  }
  CHECK(morse_rwa(p, 2, MorseVariant::full) == morse_rwa_full(p, 2));
  CHECK(morse_rwa(p, 2, MorseVariant::printed) == morse_rwa_second_order(p, 2, Expansion::printed));
}

TEST_CASE("full-minus-expansion residue falls like alpha^3/lambda", "[models][morse][property]") {
  std::vector<double> diffs;
  for (double lam : {10.0, 20.0, 40.0, 80.0}) {
    const MorseParams p{lam, 1.0, 0.0};
    diffs.push_back(std::abs(morse_rwa_full(p, 0) - morse_rwa_second_order(p, 0, Expansion::derivation)));
  }
  CHECK(diffs[0] == Approx(0.005813).margin(2e-6));
  for (std::size_t i = 1; i < diffs.size(); ++i) CHECK(diffs[i - 1] / diffs[i] == Approx(2.0).margin(0.1));
}

TEST_CASE("morse_numeric_fock reproduces the exact levels", "[models][morse][slow]") {
  const MorseParams p{10.0, 1.0, 0.0};
  const auto t = morse_numeric_fock(p, 765, 6);
  CHECK(t.converged);
  for (int n = 0; n < 6; ++n) CHECK(std::abs(t.levels[n] - morse_exact(p, n)) <= 1e-4);
  CHECK(std::abs(t.levels[0] - 6.9460678) <= 1e-4);
  CHECK(std::abs(t.levels[3] - morse_exact(p, 3)) <= 1e-3);

  for (double b : {1.0, -3.0}) {
    const auto tb = morse_numeric_fock({10.0, 1.0, b}, 300, 4);
    const auto t0 = morse_numeric_fock(p, 300, 4);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(tb.levels[n] - t0.levels[n]) <= 1e-6);
  }
  CHECK_THROWS_AS(morse_numeric_fock(p, 200, 2), InvalidArgument);
  CHECK_THROWS_AS(morse_numeric_fock({2.0, 1.0, 0.0}, 300, 4), UnboundLevel);
}

TEST_CASE("morse effective potential", "[models][morse]") {
  for (double a : {0.1, 1.0, 10.0}) CHECK(morse_veff(a, 0.0) == 0.0);
  CHECK(morse_veff(1.0, 1.0) == Approx(1.676034421453144).epsilon(1e-14));
  CHECK(morse_veff(1.0, 1.0) == Approx(1.0 + std::cosh(2.0) - 2.0 * std::cosh(1.0)).epsilon(1e-15));
  for (double x = -3.0; x <= 3.0; x += 0.25) CHECK(morse_veff(0.7, x) == morse_veff(0.7, -x));
  CHECK(morse_veff_normalized(3.0, 1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(morse_veff_normalized(3.0, 0.0) == 0.0);
  CHECK_THROWS_AS(morse_veff_normalized(0.0, 0.5), DegenerateNormalization);
  // V_eff is lam^-2 times the even part of the Morse potential.
  const auto even = potentials::morse_even_part(2.0, 0.7);
  CHECK(even.value_at(1.3) == Approx(4.0 * morse_veff(0.7, 1.3)).epsilon(1e-14));
}

TEST_CASE("cosine error sweep", "[models][sweep]") {
  const auto t = error_sweep_cosine(1.0, {5.0, 10.0, 20.0, 40.0}, 5, 765);
  REQUIRE(t.rows.size() == 24);
  CHECK_FALSE(t.relative);
  for (const auto& r : t.rows) {
    CHECK(r.error >= 0.0);
    CHECK(std::isfinite(r.error));
  }
  const auto at = [&](double g, int n) {
    for (const auto& r : t.rows)
      if (r.parameter == g && r.n == n) return r.error;
    return -1.0;
  };
  CHECK(at(10.0, 0) <= 5e-3);
  CHECK(at(10.0, 0) == Approx(1.4654e-3).margin(1e-6));
  CHECK(at(10.0, 0) < at(10.0, 5));
  CHECK(mean_delta(t, 5.0) > mean_delta(t, 10.0));
  CHECK(mean_delta(t, 10.0) > mean_delta(t, 20.0));
  CHECK(mean_delta(t, 20.0) > mean_delta(t, 40.0));

  CHECK_THROWS_AS(error_sweep_cosine(1.0, {}, 5, 765), InvalidArgument);
  CHECK_THROWS_AS(error_sweep_cosine(1.0, {10.0}, 9, 765), InvalidArgument);
  CHECK_THROWS_AS(error_sweep_cosine(1.0, {0.0}, 2, 765), NoSelfOscillator);
}

TEST_CASE("morse error sweep", "[models][sweep]") {
  const auto lam = linear_grid(5.0, 40.0, 36);
  const auto t = error_sweep_morse(1.0, lam, 5, MorseVariant::derivation);
  REQUIRE(t.rows.size() == 36 * 6);
  CHECK(t.relative);
  for (int n = 0; n <= 5; ++n) {
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& r : t.rows)
      if (r.n == n) {
        CHECK(r.error < prev);
        prev = r.error;
      }
  }
  const auto d10 = morse_error_point(1.0, 10.0, 0, MorseVariant::derivation);
  const auto d20 = morse_error_point(1.0, 20.0, 0, MorseVariant::derivation);
  CHECK(d10.error == Approx(0.0495).margin(5e-4));
  CHECK(d20.error == Approx(0.0245).margin(5e-4));
  // Closed form of the derivation residue: (7/32 + 1/8)/E_exact.
  CHECK(d10.error == Approx(0.34375 / morse_exact({10.0, 1.0, 0.0}, 0)).epsilon(1e-12));
  CHECK(morse_error_point(1.0, 10.0, 0, MorseVariant::printed).error == Approx(0.205).margin(5e-3));

  CHECK_THROWS_AS(error_sweep_morse(1.0, {2.0, 10.0}, 5, MorseVariant::full), UnboundLevel);
  CHECK_THROWS_AS(error_sweep_morse(1.0, {}, 2, MorseVariant::full), InvalidArgument);
}

TEST_CASE("linear_grid", "[models]") {
  const auto g = linear_grid(1.0, 40.0, 40);
  CHECK(g.size() == 40);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 40.0);
  CHECK(g[9] == 10.0);
  CHECK(linear_grid(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), InvalidArgument);
}
