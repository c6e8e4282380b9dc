#pragma once

// CODATA 2018 values, frozen so results are reproducible bit-for-bit even if
// the toolchain's own headers ever start shipping physical constants.
namespace qdot::constants {

// Hartree energy expressed in meV: E_h / (10^-3 e) with the 2018 exact charge.
inline constexpr double hartree_mev = 27211.386245988;

// Bohr radius in nm.
inline constexpr double bohr_nm = 0.0529177210903;

// Raw SI values used to assemble magnetic-field conversions.
inline constexpr double hbar_si = 1.054571817e-34;        // J s (derived, 2018)
inline constexpr double elementary_charge_si = 1.602176634e-19;  // C (exact)
inline constexpr double electron_mass_si = 9.1093837015e-31;     // kg

// 1 meV in joules.
inline constexpr double mev_si = 1.0e-3 * elementary_charge_si;

}  // namespace qdot::constants
