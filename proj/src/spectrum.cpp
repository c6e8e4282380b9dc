#include "qdot/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "qdot/algebra.hpp"
#include "qdot/errors.hpp"
#include "qdot/wavefunction.hpp"

namespace qdot::spectrum {

QesSolution qes_point(int j, int m, int n_r,
                      const units::MaterialParams& params) {
  if (j < 1) throw InvalidInput("level degree j must be >= 1");
  if (n_r < 0) throw InvalidInput("branch label n_r must be >= 0");
  const units::Scales scales = units::derive_scales(params);

  const auto etas = algebra::eta_values(j, std::abs(m));
  if (n_r >= static_cast<int>(etas.size())) {
    std::ostringstream msg;
    msg << "(j=" << j << ", |m|=" << std::abs(m) << ") has "
        << etas.size() << " branches; n_r=" << n_r << " does not exist";
    throw InvalidInput(msg.str());
  }

  QesSolution sol;
  sol.j = j;
  sol.m = m;
  sol.n_r = n_r;
  sol.eta = etas[static_cast<size_t>(n_r)].value;
  sol.omega_ha = 1.0 / (2.0 * sol.eta);

  // The coupling is certified to ~1e-13 relative, so a frequency within that
  // band of the confinement is the boundary case (B -> 0), not infeasible.
  if (sol.omega_ha < scales.omega0_ha * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "solvable frequency " << sol.omega_ha * scales.hartree_mev
        << " meV lies below the confinement " << params.confinement_energy_mev
        << " meV for (j=" << j << ", m=" << m << ", n_r=" << n_r
        << "): no magnetic field reaches it";
    throw NoQesField(msg.str());
  }

  const double disc =
      std::max(0.0, sol.omega_ha * sol.omega_ha -
                        scales.omega0_ha * scales.omega0_ha);
  sol.omega_c_ha = 2.0 * std::sqrt(disc);
  sol.e_r_ha = relative_energy(j, m, sol.omega_ha, sol.omega_c_ha);
  sol.b_tesla =
      units::cyclotron_to_tesla(sol.omega_c_ha * scales.hartree_mev, params);
  sol.dot_size_nm = dot_size(sol.omega_ha, params);
  sol.coeffs = wavefunction::coefficients(j, std::abs(m), sol.omega_ha);
  return sol;
}

double relative_energy(int j, int m, double omega_ha, double omega_c_ha) {
  return (j + std::abs(m) + 1) * omega_ha + 0.5 * m * omega_c_ha;
}

CmState cm_energy(int N, int M, double omega_ha, double omega_c_ha) {
  if (N < 0) throw InvalidInput("radial quantum number N must be >= 0");
  return {N, M, (2 * N + std::abs(M) + 1) * omega_ha + 0.5 * M * omega_c_ha};
}

double total_energy(double e_r_ha, double e_R_ha) {
  return 2.0 * e_r_ha + 0.5 * e_R_ha;
}

double dot_size(double omega_ha, const units::MaterialParams& params) {
  if (!(omega_ha > 0.0) || !std::isfinite(omega_ha)) {
    throw InvalidInput("frequency must be positive and finite");
  }
  return units::derive_scales(params).bohr_nm / std::sqrt(omega_ha);
}

}  // namespace qdot::spectrum
