#pragma once

#include <vector>

#include "qdot/matrix.hpp"
#include "qdot/polynomial.hpp"

namespace qdot::algebra {

/// The three sl2 generators in the degree-j polynomial realization
///   J- r^k = k r^{k-1},  J0 r^k = (k - j/2) r^k,  J+ r^k = (k - j) r^{k+1}.
/// J+ annihilates r^j, so polynomials of degree <= j form an invariant space.
enum class Generator { j_plus, j_zero, j_minus };

/// Exact matrix of a generator on the monomial basis {1, r, ..., r^j}.
/// Rational because J0 has half-integer entries for odd j.
Matrix<BigRational> generator_matrix(Generator g, int j);

/// Matrix of the spectral operator
///   T = J+ - J- J0 - (4m + j)/2 J-
/// on the invariant space, in units where the oscillator frequency has been
/// scaled out (spectral variable t = coupling / sqrt(frequency)). Built by
/// composing the generator matrices; the result is integral even though the
/// intermediates are not.
Matrix<BigInt> t_matrix(int j, int m);

/// Characteristic polynomial det(tI - T) with exact integer coefficients,
/// via the Faddeev-LeVerrier trace recursion. Deliberately independent of
/// recurrence_polynomials so the two can arbitrate each other.
polynomial::IntegerPolynomial critical_polynomial(int j, int m);

/// The orthogonal-polynomial family P_0..P_{j+1} of the three-term recurrence
///   P_{k+1}(t) = t P_k(t) - k (k + 2m) (j + 1 - k) P_{k-1}(t),
///   P_0 = 1, P_1 = t.
/// Its last member coincides with critical_polynomial(j, m) exactly.
std::vector<polynomial::IntegerPolynomial> recurrence_polynomials(int j, int m);

/// One admissible dimensionless coupling: eta = t^2 for a negative root t of
/// the critical polynomial. n_r labels the values 0,1,... in descending-eta
/// order (and equals the node count of the matching closed-form state).
struct EtaValue {
  double value;
  int n_r;
};

/// All physical couplings for (j, m), descending. Exactly floor((j+1)/2)
/// entries: one per +/- root pair; the t = 0 root of even-j polynomials is
/// discarded as zero coupling.
std::vector<EtaValue> eta_values(int j, int m);

/// Eigenvalues of t_matrix, ascending, computed by symmetrizing the
/// tridiagonal matrix and bisecting on the Sturm count. This is a separate
/// numerical route used to cross-check the exact polynomial roots.
std::vector<double> t_matrix_eigenvalues(int j, int m);

}  // namespace qdot::algebra
