#pragma once

#include <vector>

#include "qdot/units.hpp"

namespace qdot::spectrum {

/// One exactly solvable operating point of the two-electron dot: the magnetic
/// field at which the (j, m, n_r) relative-motion state is available in
/// closed form, together with all its derived quantities.
struct QesSolution {
  int j;
  int m;    // signed; the radial problem feels |m|, the Zeeman term feels m
  int n_r;  // branch label = node count
  double eta;          // dimensionless coupling, omega_ha = 1/(2 eta)
  double omega_ha;     // effective frequency, Ha*
  double omega_c_ha;   // cyclotron frequency, Ha*
  double b_tesla;      // laboratory field
  double e_r_ha;       // relative-motion energy, Ha*
  double dot_size_nm;  // confinement length
  std::vector<double> coeffs;  // polynomial part of the radial state
};

/// Center-of-mass oscillator level (exact at every field).
struct CmState {
  int N;
  int M;
  double e_R_ha;
};

/// Builds the QES point for branch n_r of (j, m) in the given material.
///
/// Throws NoQesField when the solvable frequency lies below the static
/// confinement (no real field realizes it); equality is allowed and lands on
/// B = 0 exactly.
QesSolution qes_point(int j, int m, int n_r,
                      const units::MaterialParams& params);

/// Relative-motion energy (j + |m| + 1) w + m w_c / 2.
double relative_energy(int j, int m, double omega_ha, double omega_c_ha);

/// Center-of-mass energy (2N + |M| + 1) w + M w_c / 2.
CmState cm_energy(int N, int M, double omega_ha, double omega_c_ha);

/// Total two-electron energy 2 e_r + e_R / 2 (relative + center of mass in
/// the scaled coordinates that split the Hamiltonian).
double total_energy(double e_r_ha, double e_R_ha);

/// Confinement length a*/sqrt(w), in nm.
double dot_size(double omega_ha, const units::MaterialParams& params);

}  // namespace qdot::spectrum
