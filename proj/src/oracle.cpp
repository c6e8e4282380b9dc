#include "qdot/oracle.hpp"

#include <cmath>
#include <sstream>

#include "qdot/errors.hpp"
#include "qdot/tridiagonal.hpp"

namespace qdot::oracle {

void OracleConfig::validate() const {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw InvalidInput("oracle r_max must be positive and finite");
  }
  if (n_points < 200) throw InvalidInput("oracle needs n_points >= 200");
  if (n_states < 1 || n_states > 10) {
    throw InvalidInput("oracle n_states must be in [1, 10]");
  }
  if (!(coulomb_strength >= 0.0) || !std::isfinite(coulomb_strength)) {
    throw InvalidInput("coulomb_strength must be >= 0 and finite");
  }
}

OracleConfig OracleConfig::for_frequency(double omega_ha, int n_states,
                                         double coulomb_strength) {
  if (!(omega_ha > 0.0) || !std::isfinite(omega_ha)) {
    throw InvalidInput("frequency must be positive and finite");
  }
  OracleConfig c;
  c.r_max = 12.0 / std::sqrt(omega_ha);
  c.n_states = n_states;
  c.coulomb_strength = coulomb_strength;
  return c;
}

namespace {

// Eigenvalues of the discretized operator on a grid with n interior points.
//
// The regular parts (kinetic Laplacian, oscillator well) use plain central
// differences. The singular part — centrifugal plus Coulomb — enters through
// the per-node coefficient S_i = (g + D2 f / 2)(r_i) / f(r_i) built from the
// comparison function f(r) = r^nu (1 + beta r), nu = |m| + 1/2, which solves
//   -f''/2 + [ (m^2-1/4)/(2r^2) + c/(2r) ] f = g,   g = (beta c / 2) r^nu,
// exactly when beta = c/(2 nu). Being assembled from the same central second
// difference as the kinetic term, S_i cancels the discretization error of the
// singular coefficients on the leading r -> 0 behavior of the true solution;
// away from the origin S_i -> (m^2-1/4)/(2r^2) + c/(2r) pointwise.
std::vector<double> grid_eigenvalues(int m, double omega,
                                     const OracleConfig& config, int n) {
  const double nu = std::abs(m) + 0.5;
  const double c = config.coulomb_strength;
  const double beta = (c != 0.0) ? c / (2.0 * nu) : 0.0;
  const double h = config.r_max / (n + 1);

  const auto f = [&](double r) {
    return (r <= 0.0) ? 0.0 : std::pow(r, nu) * (1.0 + beta * r);
  };

  tridiagonal::SymTridiagonal t;
  t.diag.resize(static_cast<size_t>(n));
  t.off.assign(static_cast<size_t>(n) - 1, -0.5 / (h * h));
  for (int i = 1; i <= n; ++i) {
    const double r = h * i;
    const double d2f = (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
    const double g = 0.5 * beta * c * std::pow(r, nu);
    const double singular = (g + 0.5 * d2f) / f(r);
    t.diag[static_cast<size_t>(i) - 1] =
        1.0 / (h * h) + 0.5 * omega * omega * r * r + singular;
  }
  return tridiagonal::lowest_eigenvalues(t, config.n_states);
}

}  // namespace

OracleSpectrum solve_radial(int m, double omega_ha,
                            const OracleConfig& config) {
  config.validate();
  if (!(omega_ha > 0.0) || !std::isfinite(omega_ha)) {
    throw InvalidInput("frequency must be positive and finite");
  }

  const auto coarse = grid_eigenvalues(m, omega_ha, config, config.n_points);
  const auto fine =
      grid_eigenvalues(m, omega_ha, config, 2 * config.n_points + 1);

  OracleSpectrum spec;
  spec.m = m;
  spec.omega_ha = omega_ha;
  const size_t k = coarse.size();
  spec.eigenvalues.resize(k);
  spec.richardson_error.resize(k);
  for (size_t i = 0; i < k; ++i) {
    spec.eigenvalues[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    spec.richardson_error[i] = std::fabs(fine[i] - coarse[i]) / 3.0;
  }

  for (size_t i = 0; i < k; ++i) {
    double spacing = std::numeric_limits<double>::infinity();
    if (i > 0) spacing = spec.eigenvalues[i] - spec.eigenvalues[i - 1];
    if (i + 1 < k) {
      spacing = std::min(spacing, spec.eigenvalues[i + 1] - spec.eigenvalues[i]);
    }
    if (spec.richardson_error[i] > 1e-5 * spacing) {
      std::ostringstream msg;
      msg << "discretization error " << spec.richardson_error[i]
          << " for state " << i << " exceeds 1e-5 of the level spacing "
          << spacing << "; increase n_points";
      throw ConvergenceFailure(msg.str());
    }
  }
  return spec;
}

VerifyReport verify_qes(const spectrum::QesSolution& sol,
                        const OracleConfig& config) {
  OracleConfig cfg = config;
  if (cfg.n_states <= sol.n_r) cfg.n_states = sol.n_r + 1;
  const auto spec = solve_radial(sol.m, sol.omega_ha, cfg);

  VerifyReport report;
  report.index = sol.n_r;
  // Closed-form radial eigenvalue with the Zeeman shift removed; equals
  // (j + |m| + 1) w by construction of e_r.
  report.predicted = sol.e_r_ha - 0.5 * sol.m * sol.omega_c_ha;
  report.oracle = spec.eigenvalues[static_cast<size_t>(sol.n_r)];
  report.abs_diff = std::fabs(report.predicted - report.oracle);
  return report;
}

}  // namespace qdot::oracle
