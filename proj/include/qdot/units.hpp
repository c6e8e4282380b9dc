#pragma once

#include <optional>
#include <string>

namespace qdot::units {

/// Band parameters of the host material plus the static confinement energy.
struct MaterialParams {
  double effective_mass_ratio;    // m*/m0
  double dielectric_constant;     // relative permittivity
  double confinement_energy_mev;  // hbar*omega0 in meV

  /// Throws InvalidInput unless mass > 0, permittivity >= 1, confinement >= 0.
  void validate() const;
};

/// Effective atomic units (hbar = m* = e^2/eps = 1) for a given material.
///
/// Internally every energy is measured in effective Hartrees Ha* and every
/// length in effective Bohr radii a*; these scales are the only place where
/// laboratory units enter.
struct Scales {
  double hartree_mev;  // Ha* = (m*/m0)/eps^2 * hartree
  double bohr_nm;      // a*  = eps/(m*/m0)   * bohr
  double omega0_ha;    // confinement energy in Ha*
};

Scales derive_scales(const MaterialParams& params);

/// Converts a cyclotron energy hbar*omega_c (meV) to the magnetic field (T)
/// that produces it: B = m* omega_c / e.
double cyclotron_to_tesla(double omega_c_mev, const MaterialParams& params);

/// Inverse of cyclotron_to_tesla.
double tesla_to_cyclotron_mev(double b_tesla, const MaterialParams& params);

/// Built-in material presets ("gaas", "vacuum"); nullopt for unknown names.
std::optional<MaterialParams> material_preset(const std::string& name,
                                              double omega0_mev);

}  // namespace qdot::units
