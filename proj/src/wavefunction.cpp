#include "qdot/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdot/errors.hpp"
#include "qdot/quadrature.hpp"

namespace qdot::wavefunction {

namespace {

void check_inputs(int j, double omega_ha) {
  if (j < 1) throw InvalidInput("polynomial degree j must be >= 1");
  if (!(omega_ha > 0.0) || !std::isfinite(omega_ha)) {
    throw InvalidInput("frequency must be positive and finite");
  }
}

double poly_eval(const std::vector<double>& c, double r) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
  return acc;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  if (c.size() <= 1) return {};
  std::vector<double> d(c.size() - 1);
  for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return d;
}

// Sign-variation count of a double-precision Sturm chain evaluation.
int variations(const std::vector<double>& values) {
  int count = 0, prev = 0;
  for (double v : values) {
    const int sg = (v > 0.0) - (v < 0.0);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

// Positive-root count for a well-scaled low-degree polynomial. Each chain
// member is rescaled to unit magnitude and coefficients below 1e-12 of that
// are treated as zero, which keeps the floating-point division cascade tame.
int positive_root_count(std::vector<double> p) {
  const auto normalize = [](std::vector<double>& c) {
    double mag = 0.0;
    for (double v : c) mag = std::max(mag, std::fabs(v));
    if (mag == 0.0) {
      c.clear();
      return;
    }
    for (double& v : c) v /= mag;
    while (!c.empty() && std::fabs(c.back()) < 1e-12) c.pop_back();
  };

  normalize(p);
  if (p.size() <= 1) return 0;

  std::vector<std::vector<double>> chain{p, poly_derivative(p)};
  normalize(chain[1]);
  while (chain.back().size() > 1) {
    // Remainder of chain[n-2] by chain[n-1], negated.
    std::vector<double> rem = chain[chain.size() - 2];
    const std::vector<double>& div = chain.back();
    while (rem.size() >= div.size() && !rem.empty()) {
      const double factor = rem.back() / div.back();
      const size_t shift = rem.size() - div.size();
      for (size_t k = 0; k < div.size(); ++k) rem[k + shift] -= factor * div[k];
      rem.pop_back();
      while (!rem.empty() && std::fabs(rem.back()) < 1e-12) rem.pop_back();
    }
    for (double& v : rem) v = -v;
    normalize(rem);
    if (rem.empty()) break;  // numerically non-square-free; chain ends
    chain.push_back(std::move(rem));
  }

  std::vector<double> at_zero, at_infinity;
  for (const auto& s : chain) {
    at_zero.push_back(s.front());
    at_infinity.push_back(s.back());
  }
  return variations(at_zero) - variations(at_infinity);
}

}  // namespace

std::vector<double> coefficients(int j, int m, double omega_ha) {
  check_inputs(j, omega_ha);
  const int a = std::abs(m);

  std::vector<double> c(static_cast<size_t>(j) + 1);
  c[0] = 1.0;
  double max_mag = 1.0;
  for (int k = 0; k < j; ++k) {
    const double prev = (k > 0) ? c[static_cast<size_t>(k) - 1] : 0.0;
    c[static_cast<size_t>(k) + 1] =
        (c[static_cast<size_t>(k)] - 2.0 * omega_ha * (j + 1 - k) * prev) /
        (static_cast<double>(k + 1) * (k + 1 + 2 * a));
    max_mag = std::max(max_mag, std::fabs(c[static_cast<size_t>(k) + 1]));
  }

  // One more recurrence step: at a solvable frequency the series terminates,
  // so this value is the termination residual.
  const double beyond =
      (c[static_cast<size_t>(j)] - 2.0 * omega_ha * c[static_cast<size_t>(j) - 1]) /
      (static_cast<double>(j + 1) * (j + 1 + 2 * a));
  if (std::fabs(beyond) > 1e-10 * max_mag) {
    std::ostringstream msg;
    msg << "series does not terminate at omega = " << omega_ha << " for (j="
        << j << ", |m|=" << a << "): residual " << std::fabs(beyond) / max_mag;
    throw NotQesFrequency(msg.str());
  }
  return c;
}

RadialWavefunction build(int j, int m, double omega_ha) {
  RadialWavefunction w;
  w.j = j;
  w.m = m;
  w.omega_ha = omega_ha;
  w.coeffs = coefficients(j, m, omega_ha);
  w.node_count = positive_root_count(w.coeffs);

  // The Gaussian makes anything beyond ~7/sqrt(w) invisible at double
  // precision; 9/sqrt(w) leaves the tail below 1e-30 of the integral.
  const double r_cut = 9.0 / std::sqrt(omega_ha);
  const double a = std::abs(m);
  const auto u2 = [&](double r) {
    const double u = std::pow(r, a + 0.5) * std::exp(-0.5 * omega_ha * r * r) *
                     poly_eval(w.coeffs, r);
    return u * u;
  };
  const double norm2 = quadrature::integrate(u2, 0.0, r_cut, 1e-13, 0.0);
  w.norm = std::sqrt(norm2);
  return w;
}

double evaluate(const RadialWavefunction& w, double r) {
  if (r < 0.0 || !std::isfinite(r)) {
    throw InvalidInput("radial coordinate must be >= 0");
  }
  if (r == 0.0) return 0.0;
  const double a = std::abs(w.m);
  return std::pow(r, a + 0.5) * std::exp(-0.5 * w.omega_ha * r * r) *
         poly_eval(w.coeffs, r) / w.norm;
}

int count_nodes(const RadialWavefunction& w) {
  return positive_root_count(w.coeffs);
}

double ode_residual(const RadialWavefunction& w, double eps_ha,
                    double coulomb_strength) {
  const double omega = w.omega_ha;
  const double a = std::abs(w.m);
  const double b = a + 0.5;  // prefactor exponent
  const auto dp = poly_derivative(w.coeffs);
  const auto d2p = poly_derivative(dp);

  // Logarithmic grid over the region where u is non-negligible.
  const double r_lo = 1e-3 / std::sqrt(omega);
  const double r_hi = 8.0 / std::sqrt(omega);
  constexpr int n_samples = 400;

  double max_res = 0.0, max_u = 0.0;
  for (int i = 0; i <= n_samples; ++i) {
    const double r =
        r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / n_samples);
    const double f = std::pow(r, b) * std::exp(-0.5 * omega * r * r);
    const double logd = b / r - omega * r;            // f'/f
    const double logd2 = logd * logd - b / (r * r) - omega;  // f''/f
    const double p = poly_eval(w.coeffs, r);
    const double p1 = poly_eval(dp, r);
    const double p2 = poly_eval(d2p, r);

    const double u = f * p;
    const double ddu = f * (logd2 * p + 2.0 * logd * p1 + p2);
    const double potential = (w.m * w.m - 0.25) / (2.0 * r * r) +
                             0.5 * omega * omega * r * r +
                             coulomb_strength / (2.0 * r);
    const double res = -0.5 * ddu + (potential - eps_ha) * u;
    max_res = std::max(max_res, std::fabs(res));
    max_u = std::max(max_u, std::fabs(u));
  }
  return max_res / max_u;
}

}  // namespace qdot::wavefunction
