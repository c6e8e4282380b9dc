#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qdot/errors.hpp"
#include "qdot/quadrature.hpp"
#include "qdot/tridiagonal.hpp"

using namespace qdot;

TEST_CASE("tridiagonal bisection reproduces the Toeplitz spectrum") {
  // diag = 2, off = -1 has eigenvalues 2 - 2 cos(k pi / (n+1)), a classic
  // closed-form check.
  const int n = 100;
  tridiagonal::SymTridiagonal t;
  t.diag.assign(n, 2.0);
  t.off.assign(n - 1, -1.0);

  const auto lowest = tridiagonal::lowest_eigenvalues(t, 5);
  REQUIRE(lowest.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    const double expected = 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1));
    CHECK(lowest[k - 1] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("Sturm count is consistent with the computed eigenvalues") {
  const int n = 50;
  tridiagonal::SymTridiagonal t;
  t.diag.resize(n);
  t.off.assign(n - 1, 0.7);
  for (int i = 0; i < n; ++i) t.diag[i] = 0.1 * i;

  const auto evs = tridiagonal::lowest_eigenvalues(t, 10);
  for (int k = 0; k < 10; ++k) {
    CHECK(tridiagonal::count_below(t, evs[k] + 1e-9) == k + 1);
    CHECK(tridiagonal::count_below(t, evs[k] - 1e-9) == k);
  }
}

TEST_CASE("tridiagonal input validation") {
  tridiagonal::SymTridiagonal bad;
  bad.diag = {1.0, 2.0};
  bad.off = {0.5, 0.5};  // wrong length
  CHECK_THROWS_AS(tridiagonal::count_below(bad, 0.0), InvalidInput);
  tridiagonal::SymTridiagonal ok;
  ok.diag = {1.0, 2.0};
  ok.off = {0.5};
  CHECK_THROWS_AS(tridiagonal::lowest_eigenvalues(ok, 3), InvalidInput);
}

TEST_CASE("quadrature is exact on polynomials within one panel") {
  // 15-point Gauss-Legendre integrates degree 29 exactly.
  const double got = quadrature::integrate([](double x) { return std::pow(x, 29); },
                                           0.0, 1.0);
  CHECK(got == doctest::Approx(1.0 / 30.0).epsilon(1e-14));
}

TEST_CASE("quadrature handles smooth transcendental integrands") {
  const double s = quadrature::integrate([](double x) { return std::sin(x); },
                                         0.0, std::numbers::pi);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-13));

  const double g = quadrature::integrate(
      [](double x) { return std::exp(-x * x); }, 0.0, 3.0);
  CHECK(g == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0 * std::erf(3.0))
                 .epsilon(1e-13));
}

TEST_CASE("quadrature orientation and degenerate interval") {
  CHECK(quadrature::integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
  const double fwd =
      quadrature::integrate([](double x) { return x * x; }, 0.0, 1.0);
  const double rev =
      quadrature::integrate([](double x) { return x * x; }, 1.0, 0.0);
  CHECK(fwd == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(rev == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
}
