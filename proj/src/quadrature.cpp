#include "qdot/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "qdot/errors.hpp"

namespace qdot::quadrature {

namespace {

constexpr int kOrder = 15;

struct Rule {
  std::array<double, kOrder> node;    // on [-1, 1]
  std::array<double, kOrder> weight;
};

// Legendre P_n and its derivative at x, by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

Rule make_rule() {
  Rule rule{};
  for (int i = 0; i < kOrder; ++i) {
    // Chebyshev-like initial guess, then Newton to machine precision.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    for (int iter = 0; iter < 60; ++iter) {
      const auto [p, dp] = legendre(kOrder, x);
      const double step = p / dp;
      x -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    const auto [p, dp] = legendre(kOrder, x);
    (void)p;
    rule.node[static_cast<size_t>(i)] = x;
    rule.weight[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kOrder; ++i) {
    acc += r.weight[static_cast<size_t>(i)] *
           f(mid + half * r.node[static_cast<size_t>(i)]);
  }
  return acc * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid);
  const double right = panel(f, mid, b);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= tol || depth >= 48) {
    return left + right;
  }
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidInput("integration endpoints must be finite");
  }
  if (a == b) return 0.0;
  const double rough = panel(f, a, b);
  const double tol =
      std::max(std::fabs(rough) * rel_tol, abs_tol) +
      std::numeric_limits<double>::min();
  return adapt(f, a, b, rough, tol, 0);
}

}  // namespace qdot::quadrature
