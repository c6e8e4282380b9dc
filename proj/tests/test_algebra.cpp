#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "qdot/algebra.hpp"
#include "qdot/errors.hpp"
#include "qdot/polynomial.hpp"

using namespace qdot;
using algebra::Generator;
using polynomial::IntegerPolynomial;

namespace {

IntegerPolynomial poly(std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntegerPolynomial(std::move(c));
}

Matrix<BigInt> mat3(std::vector<std::vector<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix<BigInt> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("integer polynomial arithmetic and evaluation") {
  const auto a = poly({1, 0, 2});   // 2t^2 + 1
  const auto b = poly({-1, 3});     // 3t - 1
  CHECK((a + b) == poly({0, 3, 2}));
  CHECK((a - b) == poly({2, -3, 2}));
  CHECK((a * b) == poly({-1, 3, -2, 6}));
  CHECK((a * BigInt(-2)) == poly({-2, 0, -4}));
  CHECK(a.shifted_up() == poly({0, 1, 0, 2}));
  CHECK(a.evaluate(0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(a.evaluate(BigRational(1, 2)) == BigRational(3, 2));
  CHECK(poly({}).is_zero());
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({5}).degree() == 0);
  CHECK(a.degree() == 2);
  CHECK(poly({0, -6, 0, 1}).str() == "t^3 - 6*t");
}

TEST_CASE("parity detection") {
  CHECK(poly({0, -6, 0, 1}).has_definite_parity());  // odd
  CHECK(poly({27, 0, -20, 0, 1}).has_definite_parity());  // even
  CHECK(!poly({1, 1}).has_definite_parity());
}

TEST_CASE("Sturm root counting") {
  // (t^2-1)(t^2-4) = t^4 - 5t^2 + 4: four simple real roots.
  const auto p = poly({4, 0, -5, 0, 1});
  CHECK(polynomial::count_real_roots(p) == 4);
  CHECK(polynomial::is_square_free(p));
  // (t-1)^2
  CHECK(!polynomial::is_square_free(poly({1, -2, 1})));
  // t^2 + 1: no real roots.
  CHECK(polynomial::count_real_roots(poly({1, 0, 1})) == 0);
}

TEST_CASE("certified positive root isolation") {
  const auto p = poly({4, 0, -5, 0, 1});  // roots -2, -1, 1, 2
  const auto roots = polynomial::positive_roots(p, 1e-13);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-12));

  // Integer root landing exactly on dyadic bisection points.
  const auto linear = polynomial::positive_roots(poly({-6, 1}), 1e-13);
  REQUIRE(linear.size() == 1);
  CHECK(linear[0] == doctest::Approx(6.0).epsilon(1e-12));

  CHECK_THROWS_AS(polynomial::positive_roots(poly({1, -2, 1}), 1e-13),
                  InvalidInput);
}

TEST_CASE("generator matrices obey the sl2 commutators exactly") {
  for (int j = 0; j <= 12; ++j) {
    const auto jp = algebra::generator_matrix(Generator::j_plus, j);
    const auto j0 = algebra::generator_matrix(Generator::j_zero, j);
    const auto jm = algebra::generator_matrix(Generator::j_minus, j);
    CHECK((j0 * jp - jp * j0) == jp);
    CHECK((j0 * jm - jm * j0) == jm * BigRational(-1));
    CHECK((jp * jm - jm * jp) == j0 * BigRational(-2));
  }
}

TEST_CASE("spectral operator matrix: hand-derived cases") {
  // Applying the generator actions to {1, r}: T 1 = -r, T r = -1.
  CHECK(algebra::t_matrix(1, 0) == mat3({{0, -1}, {-1, 0}}));
  // j = 0: T annihilates constants.
  CHECK(algebra::t_matrix(0, 0) == mat3({{0}}));
  // Hand application on {1, r, r^2} at m = 1.
  CHECK(algebra::t_matrix(2, 1) == mat3({{0, -3, 0}, {-2, 0, -8}, {0, -1, 0}}));

  CHECK_THROWS_AS(algebra::t_matrix(-1, 0), InvalidInput);
  CHECK_THROWS_AS(algebra::t_matrix(1, -1), InvalidInput);
}

TEST_CASE("characteristic polynomials of small spectral operators") {
  for (int m = 0; m <= 5; ++m) {
    CHECK(algebra::critical_polynomial(1, m) == poly({-(1 + 2 * m), 0, 1}));
  }
  CHECK(algebra::critical_polynomial(2, 0) == poly({0, -6, 0, 1}));
  CHECK(algebra::critical_polynomial(2, 1) == poly({0, -14, 0, 1}));
  CHECK(algebra::critical_polynomial(3, 0) == poly({27, 0, -20, 0, 1}));
}

TEST_CASE("recurrence equals characteristic polynomial exactly") {
  for (int j = 1; j <= 8; ++j) {
    for (int m = 0; m <= 5; ++m) {
      const auto seq = algebra::recurrence_polynomials(j, m);
      REQUIRE(static_cast<int>(seq.size()) == j + 2);
      CHECK(seq.back() == algebra::critical_polynomial(j, m));
      for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
        CHECK(seq[static_cast<size_t>(k)].degree() == k);
        CHECK(seq[static_cast<size_t>(k)].has_definite_parity());
      }
    }
  }
}

TEST_CASE("low-order members match their published closed forms") {
  for (int j = 2; j <= 8; ++j) {
    for (int m = 0; m <= 4; ++m) {
      const auto seq = algebra::recurrence_polynomials(j, m);
      CHECK(seq[2] == poly({-j * (1 + 2 * m), 0, 1}));
      if (j >= 2) {
        CHECK(seq[3] == poly({0, -(5 * j + 6 * j * m - 4 * m - 4), 0, 1}));
      }
      if (j >= 3) {
        // Constant term of P4; the widely quoted form omits the factor 3,
        // which the exact determinant identity above rules out.
        CHECK(seq[4].coeff(0) ==
              BigInt(3) * j * (j - 2) * (1 + 2 * m) * (3 + 2 * m));
      }
    }
  }
}

TEST_CASE("coupling values: closed forms for the lowest levels") {
  for (int m = 0; m <= 5; ++m) {
    const auto e1 = algebra::eta_values(1, m);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].value == doctest::Approx(1.0 + 2 * m).epsilon(1e-12));
    CHECK(e1[0].n_r == 0);

    // The quadratic-level coupling. A commonly quoted closed form gives
    // 3 + 4m here; the exact recurrence, the determinant route, and the
    // replication table all require twice that value.
    const auto e2 = algebra::eta_values(2, m);
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].value == doctest::Approx(2.0 * (3 + 4 * m)).epsilon(1e-12));

    const auto e3 = algebra::eta_values(3, m);
    REQUIRE(e3.size() == 2);
    const double disc = std::sqrt(73.0 + 128.0 * m + 64.0 * m * m);
    CHECK(e3[0].value ==
          doctest::Approx(10.0 + 10.0 * m + disc).epsilon(1e-12));
    CHECK(e3[1].value ==
          doctest::Approx(10.0 + 10.0 * m - disc).epsilon(1e-12));
    CHECK(e3[0].n_r == 0);
    CHECK(e3[1].n_r == 1);
  }
}

TEST_CASE("coupling sets are positive, distinct, descending, fully labeled") {
  for (int j = 1; j <= 8; ++j) {
    for (int m = 0; m <= 3; ++m) {
      const auto etas = algebra::eta_values(j, m);
      CHECK(static_cast<int>(etas.size()) == (j + 1) / 2);
      for (size_t i = 0; i < etas.size(); ++i) {
        CHECK(etas[i].value > 0.0);
        CHECK(etas[i].n_r == static_cast<int>(i));
        if (i > 0) CHECK(etas[i].value < etas[i - 1].value * (1.0 - 1e-9));
      }
    }
  }
}

TEST_CASE("independent eigensolve agrees with the exact polynomial roots") {
  for (int j = 1; j <= 8; ++j) {
    for (int m = 0; m <= 3; ++m) {
      // Expected spectrum: +/- sqrt(eta) pairs, plus 0 for even j.
      std::vector<double> expected;
      for (const auto& e : algebra::eta_values(j, m)) {
        expected.push_back(-std::sqrt(e.value));
        expected.push_back(std::sqrt(e.value));
      }
      if (j % 2 == 0) expected.push_back(0.0);
      std::sort(expected.begin(), expected.end());

      const auto got = algebra::t_matrix_eigenvalues(j, m);
      REQUIRE(got.size() == expected.size());
      for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("off-diagonal products are positive (symmetrizability)") {
  for (int j = 1; j <= 10; ++j) {
    for (int m = 0; m <= 3; ++m) {
      const auto t = algebra::t_matrix(j, m);
      for (int k = 0; k + 1 <= j; ++k) {
        CHECK(t(k + 1, k) * t(k, k + 1) > 0);
      }
    }
  }
}
