#pragma once

#include <vector>

namespace qdot::tridiagonal {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

/// Number of eigenvalues strictly below sigma (Sturm count from the LDL^T
/// factorization of A - sigma I).
int count_below(const SymTridiagonal& t, double sigma);

/// The k smallest eigenvalues, ascending, by bisection on the Sturm count.
///
/// Deterministic and free of cancellation surprises: each eigenvalue is
/// located independently inside the Gershgorin interval and refined to a few
/// ulps of the interval width.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k);

}  // namespace qdot::tridiagonal
