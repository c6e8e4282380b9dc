#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdot/errors.hpp"
#include "qdot/oracle.hpp"
#include "qdot/spectrum.hpp"
#include "qdot/units.hpp"

using namespace qdot;
using oracle::OracleConfig;

TEST_CASE("harmonic ladder without Coulomb term") {
  // The radial spectrum of the 2-D oscillator is (2n + |m| + 1) w.
  for (int m = 0; m <= 2; ++m) {
    const double w = 1.0;
    const auto cfg = OracleConfig::for_frequency(w, 5, 0.0);
    const auto spec = oracle::solve_radial(m, w, cfg);
    for (int n = 0; n <= 3; ++n) {
      CHECK(spec.eigenvalues[static_cast<size_t>(n)] ==
            doctest::Approx((2 * n + std::abs(m) + 1) * w).epsilon(1e-6));
    }
  }
}

TEST_CASE("lowest eigenvalue at the first solvable frequency") {
  // At w = 1/2 the closed form sqrt(r)(1+r)e^{-r^2/4} gives eps = 1 exactly.
  const auto spec =
      oracle::solve_radial(0, 0.5, OracleConfig::for_frequency(0.5, 3));
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(spec.richardson_error[0] < 1e-6);
}

TEST_CASE("solvable state appears at the index matching its node count") {
  // The weak branch of the cubic level (eta = 10 - sqrt(73)) carries one
  // node, so its energy 4w must be the SECOND eigenvalue, not the lowest.
  const double eta = 10.0 - std::sqrt(73.0);
  const double w = 1.0 / (2.0 * eta);
  const auto spec =
      oracle::solve_radial(0, w, OracleConfig::for_frequency(w, 4));
  CHECK(spec.eigenvalues[1] == doctest::Approx(4.0 * w).epsilon(1e-6));
  CHECK(std::fabs(spec.eigenvalues[0] - 4.0 * w) > 1e-3);
}

TEST_CASE("eigenvalues are ascending with finite error estimates") {
  const auto spec =
      oracle::solve_radial(1, 0.25, OracleConfig::for_frequency(0.25, 6));
  for (size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    CHECK(std::isfinite(spec.eigenvalues[i]));
    CHECK(std::isfinite(spec.richardson_error[i]));
    if (i > 0) CHECK(spec.eigenvalues[i] > spec.eigenvalues[i - 1]);
  }
}

TEST_CASE("discretization converges at second order") {
  // Halving h must shrink the h-vs-h/2 discrepancy by ~4. Compare the error
  // estimates of two runs whose coarse grids differ by one halving.
  const double w = 0.5;
  auto cfg_a = OracleConfig::for_frequency(w, 1);
  cfg_a.n_points = 600;
  auto cfg_b = cfg_a;
  cfg_b.n_points = 1201;  // grid of the refined level of cfg_a

  const auto a = oracle::solve_radial(0, w, cfg_a);
  const auto b = oracle::solve_radial(0, w, cfg_b);
  const double ratio = a.richardson_error[0] / b.richardson_error[0];
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);

  // Same check with the Coulomb term off.
  auto cfg_c = cfg_a;
  cfg_c.coulomb_strength = 0.0;
  auto cfg_d = cfg_b;
  cfg_d.coulomb_strength = 0.0;
  const auto c = oracle::solve_radial(0, w, cfg_c);
  const auto d = oracle::solve_radial(0, w, cfg_d);
  const double ratio2 = c.richardson_error[0] / d.richardson_error[0];
  CHECK(ratio2 > 3.5);
  CHECK(ratio2 < 4.5);
}

TEST_CASE("closed-form GaAs point verifies against the oracle") {
  const units::MaterialParams gaas4{0.067, 12.4, 4.0};
  const auto sol = spectrum::qes_point(1, 0, 0, gaas4);
  const auto report =
      oracle::verify_qes(sol, OracleConfig::for_frequency(sol.omega_ha));
  CHECK(report.index == 0);
  CHECK(report.predicted == doctest::Approx(2.0 * sol.omega_ha).epsilon(1e-14));
  CHECK(report.abs_diff < 1e-6);
}

TEST_CASE("quadratic level at m = 1 verifies with signed-m bookkeeping") {
  const units::MaterialParams weak{0.067, 12.4, 0.1};
  const auto sol = spectrum::qes_point(2, 1, 0, weak);
  CHECK(sol.eta == doctest::Approx(14.0).epsilon(1e-12));
  const auto report =
      oracle::verify_qes(sol, OracleConfig::for_frequency(sol.omega_ha));
  CHECK(report.index == 0);
  CHECK(report.abs_diff < 1e-6);
}

TEST_CASE("a tampered coupling is caught") {
  const units::MaterialParams weak{0.067, 12.4, 0.1};
  auto sol = spectrum::qes_point(1, 0, 0, weak);
  // Corrupt eta by 1% and keep the remaining fields self-consistent.
  sol.eta *= 1.01;
  sol.omega_ha = 1.0 / (2.0 * sol.eta);
  sol.e_r_ha = 2.0 * sol.omega_ha;
  const auto report =
      oracle::verify_qes(sol, OracleConfig::for_frequency(sol.omega_ha));
  CHECK(report.abs_diff > 1e-3);
}

TEST_CASE("inadequate grids are refused rather than silently wrong") {
  const double w = 0.268924;  // a frequency with tight level spacing
  auto cfg = OracleConfig::for_frequency(w, 4);
  cfg.n_points = 200;
  CHECK_THROWS_AS(oracle::solve_radial(0, w, cfg), ConvergenceFailure);
}

TEST_CASE("oracle input validation") {
  auto cfg = OracleConfig::for_frequency(1.0);
  cfg.n_points = 100;
  CHECK_THROWS_AS(oracle::solve_radial(0, 1.0, cfg), InvalidInput);
  cfg = OracleConfig::for_frequency(1.0);
  cfg.n_states = 11;
  CHECK_THROWS_AS(oracle::solve_radial(0, 1.0, cfg), InvalidInput);
  cfg = OracleConfig::for_frequency(1.0);
  cfg.r_max = -1.0;
  CHECK_THROWS_AS(oracle::solve_radial(0, 1.0, cfg), InvalidInput);
  CHECK_THROWS_AS(oracle::solve_radial(0, -0.5, OracleConfig::for_frequency(1.0)),
                  InvalidInput);
  CHECK_THROWS_AS(OracleConfig::for_frequency(-1.0), InvalidInput);
}
