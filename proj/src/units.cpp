#include "qdot/units.hpp"

#include <cmath>
#include <sstream>

#include "qdot/constants.hpp"
#include "qdot/errors.hpp"

namespace qdot::units {

void MaterialParams::validate() const {
  if (!(effective_mass_ratio > 0.0) || !std::isfinite(effective_mass_ratio)) {
    throw InvalidInput("effective mass ratio must be positive and finite");
  }
  if (!(dielectric_constant >= 1.0) || !std::isfinite(dielectric_constant)) {
    throw InvalidInput("dielectric constant must be >= 1 and finite");
  }
  if (!(confinement_energy_mev >= 0.0) ||
      !std::isfinite(confinement_energy_mev)) {
    throw InvalidInput("confinement energy must be >= 0 and finite");
  }
}

Scales derive_scales(const MaterialParams& params) {
  params.validate();
  const double mu = params.effective_mass_ratio;
  const double eps = params.dielectric_constant;
  Scales s;
  s.hartree_mev = constants::hartree_mev * mu / (eps * eps);
  s.bohr_nm = constants::bohr_nm * eps / mu;
  s.omega0_ha = params.confinement_energy_mev / s.hartree_mev;
  return s;
}

// Conversion factor between a cyclotron energy in meV and the field in tesla
// for the bare electron mass: B/omega_c = m0 * (1 meV / hbar) / e.
static double tesla_per_mev_bare() {
  return constants::electron_mass_si * constants::mev_si /
         (constants::hbar_si * constants::elementary_charge_si);
}

double cyclotron_to_tesla(double omega_c_mev, const MaterialParams& params) {
  params.validate();
  if (!(omega_c_mev >= 0.0) || !std::isfinite(omega_c_mev)) {
    throw InvalidInput("cyclotron energy must be >= 0 and finite");
  }
  return omega_c_mev * params.effective_mass_ratio * tesla_per_mev_bare();
}

double tesla_to_cyclotron_mev(double b_tesla, const MaterialParams& params) {
  params.validate();
  if (!(b_tesla >= 0.0) || !std::isfinite(b_tesla)) {
    throw InvalidInput("magnetic field must be >= 0 and finite");
  }
  return b_tesla / (params.effective_mass_ratio * tesla_per_mev_bare());
}

std::optional<MaterialParams> material_preset(const std::string& name,
                                              double omega0_mev) {
  if (name == "gaas") {
    return MaterialParams{0.067, 12.4, omega0_mev};
  }
  if (name == "vacuum") {
    return MaterialParams{1.0, 1.0, omega0_mev};
  }
  return std::nullopt;
}

}  // namespace qdot::units
