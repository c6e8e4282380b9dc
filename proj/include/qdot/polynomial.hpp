#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qdot {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace qdot

namespace qdot::polynomial {

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs[k] multiplies t^k. The zero polynomial is the empty coefficient
/// vector; any other value keeps a nonzero leading coefficient.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);

  static IntegerPolynomial constant(BigInt c);
  static IntegerPolynomial variable();  // the monomial t

  /// Degree, with the convention deg 0 = -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k (zero outside the stored range).
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Multiplication by t.
  IntegerPolynomial shifted_up() const;

  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const BigInt& s) const;
  bool operator==(const IntegerPolynomial& o) const = default;

  double evaluate(double t) const;
  BigRational evaluate(const BigRational& t) const;

  /// True when P(-t) == (-1)^degree P(t), i.e. only every other power occurs.
  bool has_definite_parity() const;

  /// Human-readable form like "t^3 - 6*t", for diagnostics.
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Number of distinct real roots of p over the whole real line.
int count_real_roots(const IntegerPolynomial& p);

/// True when p has no repeated roots.
bool is_square_free(const IntegerPolynomial& p);

/// All strictly positive real roots of a square-free polynomial, ascending.
///
/// Roots are isolated and refined by Sturm-count bisection over exact dyadic
/// rationals, so every returned value is certified to lie within rel_tol
/// (relative) of a true root and no positive root is missed.
std::vector<double> positive_roots(const IntegerPolynomial& p, double rel_tol);

}  // namespace qdot::polynomial
