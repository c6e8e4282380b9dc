#include "qdot/algebra.hpp"

#include <cmath>
#include <sstream>

#include "qdot/errors.hpp"
#include "qdot/tridiagonal.hpp"

namespace qdot::algebra {

using polynomial::IntegerPolynomial;

namespace {

void check_labels(int j, int m) {
  if (j < 0) throw InvalidInput("representation label j must be >= 0");
  if (m < 0) throw InvalidInput("angular momentum label m must be >= 0");
}

}  // namespace

Matrix<BigRational> generator_matrix(Generator g, int j) {
  if (j < 0) throw InvalidInput("representation label j must be >= 0");
  const int n = j + 1;
  Matrix<BigRational> mat(n, n);
  for (int k = 0; k <= j; ++k) {
    switch (g) {
      case Generator::j_minus:
        if (k > 0) mat(k - 1, k) = BigRational(k);
        break;
      case Generator::j_zero:
        mat(k, k) = BigRational(2 * k - j, 2);
        break;
      case Generator::j_plus:
        if (k < j) mat(k + 1, k) = BigRational(k - j);
        break;
    }
  }
  return mat;
}

Matrix<BigInt> t_matrix(int j, int m) {
  check_labels(j, m);
  const auto j_plus = generator_matrix(Generator::j_plus, j);
  const auto j_zero = generator_matrix(Generator::j_zero, j);
  const auto j_minus = generator_matrix(Generator::j_minus, j);

  const BigRational shift(4 * m + j, 2);
  const auto t_rational = j_plus - j_minus * j_zero - j_minus * shift;

  // The half-integer pieces cancel; insist on it rather than assume it.
  const int n = j + 1;
  Matrix<BigInt> out(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const BigRational& v = t_rational(r, c);
      if (denominator(v) != 1) {
        throw QdotError("spectral operator came out non-integral at (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
      }
      out(r, c) = numerator(v);
    }
  }
  return out;
}

IntegerPolynomial critical_polynomial(int j, int m) {
  check_labels(j, m);
  const auto a = t_matrix(j, m);
  const int n = a.rows();

  // Faddeev-LeVerrier: coefficients of det(tI - A), monic, exact.
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = 1;
  Matrix<BigInt> mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    mk = a * (mk + Matrix<BigInt>::identity(n) * coeffs[static_cast<size_t>(n - k + 1)]);
    BigInt tr = mk.trace(), q, r;
    boost::multiprecision::divide_qr(-tr, BigInt(k), q, r);
    if (r != 0) throw QdotError("trace recursion lost exactness");
    coeffs[static_cast<size_t>(n - k)] = q;
  }
  return IntegerPolynomial(std::move(coeffs));
}

std::vector<IntegerPolynomial> recurrence_polynomials(int j, int m) {
  check_labels(j, m);
  std::vector<IntegerPolynomial> p;
  p.reserve(static_cast<size_t>(j) + 2);
  p.push_back(IntegerPolynomial::constant(1));
  p.push_back(IntegerPolynomial::variable());
  for (int k = 1; k <= j; ++k) {
    const BigInt b = BigInt(k) * (k + 2 * m) * (j + 1 - k);
    p.push_back(p[static_cast<size_t>(k)].shifted_up() -
                p[static_cast<size_t>(k) - 1] * b);
  }
  return p;
}

std::vector<EtaValue> eta_values(int j, int m) {
  check_labels(j, m);
  const IntegerPolynomial p = critical_polynomial(j, m);

  // Structural guarantees of the tridiagonal operator — failure here means a
  // construction bug, not bad input.
  if (!p.has_definite_parity()) throw QdotError("critical polynomial lost parity");
  if (polynomial::count_real_roots(p) != j + 1 || !polynomial::is_square_free(p)) {
    throw QdotError("critical polynomial roots not real and simple");
  }

  // Substitute s = t^2. For odd degree p = t q(t^2); for even, p = q(t^2).
  const int start = (p.degree() % 2 == 1) ? 1 : 0;
  std::vector<BigInt> q;
  for (int k = start; k <= p.degree(); k += 2) q.push_back(p.coeff(k));
  const IntegerPolynomial substituted{std::move(q)};

  const std::vector<double> roots = polynomial::positive_roots(substituted, 1e-13);
  const int expected = (j + 1) / 2;
  if (static_cast<int>(roots.size()) != expected) {
    throw QdotError("unexpected number of physical couplings");
  }

  std::vector<EtaValue> out;
  out.reserve(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    out.push_back({roots[roots.size() - 1 - i], static_cast<int>(i)});
  }
  return out;
}

std::vector<double> t_matrix_eigenvalues(int j, int m) {
  check_labels(j, m);
  const int n = j + 1;
  if (n == 1) return {0.0};

  // T has sign-definite products across the diagonal, so D T D^-1 is
  // symmetric for a suitable positive diagonal D; only the products matter.
  tridiagonal::SymTridiagonal sym;
  sym.diag.assign(static_cast<size_t>(n), 0.0);
  sym.off.resize(static_cast<size_t>(n) - 1);
  for (int k = 0; k + 1 <= j; ++k) {
    const double product =
        static_cast<double>(j - k) * (k + 1) * (k + 1 + 2 * m);
    sym.off[static_cast<size_t>(k)] = -std::sqrt(product);
  }
  return tridiagonal::lowest_eigenvalues(sym, n);
}

}  // namespace qdot::algebra
