#include "qdot/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdot/errors.hpp"

namespace qdot::tridiagonal {

namespace {

void check_shape(const SymTridiagonal& t) {
  if (t.diag.empty() || t.off.size() + 1 != t.diag.size()) {
    throw InvalidInput("tridiagonal matrix has inconsistent dimensions");
  }
}

// Smallest pivot magnitude we allow in the LDL^T recurrence; prevents
// division overflow when sigma hits an eigenvalue of a leading submatrix.
double pivot_floor(const SymTridiagonal& t) {
  double max_off2 = 1.0;
  for (double e : t.off) max_off2 = std::max(max_off2, e * e);
  return std::numeric_limits<double>::min() * max_off2;
}

}  // namespace

int count_below(const SymTridiagonal& t, double sigma) {
  check_shape(t);
  const double tiny = pivot_floor(t);
  int count = 0;
  double d = t.diag[0] - sigma;
  if (std::fabs(d) < tiny) d = -tiny;
  if (d < 0.0) ++count;
  for (size_t i = 1; i < t.diag.size(); ++i) {
    d = t.diag[i] - sigma - t.off[i - 1] * t.off[i - 1] / d;
    if (std::fabs(d) < tiny) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k) {
  check_shape(t);
  const int n = static_cast<int>(t.diag.size());
  if (k < 1 || k > n) {
    throw InvalidInput("requested eigenvalue count outside [1, n]");
  }

  // Gershgorin bounds.
  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::fabs(t.off[i - 1]);
    if (i + 1 < n) radius += std::fabs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const double span = hi - lo;
  const double tol =
      4.0 * std::numeric_limits<double>::epsilon() *
          std::max({std::fabs(lo), std::fabs(hi), 1e-30}) +
      1e-30;

  std::vector<double> out;
  out.reserve(static_cast<size_t>(k));
  for (int idx = 0; idx < k; ++idx) {
    double a = lo, b = hi;
    // Invariant: count_below(a) <= idx < count_below(b).
    for (int iter = 0; iter < 20 && count_below(t, b) <= idx; ++iter) {
      b += std::max(span, 1.0);  // defensive; Gershgorin should not need this
    }
    while (b - a > tol) {
      const double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;  // ran out of doubles
      if (count_below(t, mid) >= idx + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(a + 0.5 * (b - a));
  }
  return out;
}

}  // namespace qdot::tridiagonal
