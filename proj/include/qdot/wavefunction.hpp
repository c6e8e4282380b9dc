#pragma once

#include <vector>

namespace qdot::wavefunction {

/// Closed-form radial eigenfunction u(r) = r^{|m|+1/2} e^{-w r^2/2} p(r) of
/// the relative-motion equation, in effective atomic units.
struct RadialWavefunction {
  int j;                       // polynomial degree of p
  int m;                       // angular momentum (only |m| enters radially)
  double omega_ha;             // effective frequency
  std::vector<double> coeffs;  // c_0..c_j of p, c_0 = 1
  double norm;                 // L2 norm of the unnormalized u on (0, inf)
  int node_count;              // zeros of p on r > 0
};

/// Polynomial coefficients c_0..c_j from the series recurrence
///   c_{k+1} = [c_k - 2w (j+1-k) c_{k-1}] / ((k+1)(k+1+2|m|)),  c_0 = 1.
/// The series must terminate: the recurrence's c_{j+1} acts as a residual and
/// must vanish to 1e-10 (relative to max |c_k|), which happens exactly when
/// omega_ha is one of the solvable frequencies for (j, |m|).
///
/// Throws NotQesFrequency otherwise.
std::vector<double> coefficients(int j, int m, double omega_ha);

/// Assembles the full wavefunction: coefficients, node count, L2 norm.
RadialWavefunction build(int j, int m, double omega_ha);

/// Normalized value u(r)/norm; u(0) = 0 by the r^{|m|+1/2} prefactor.
double evaluate(const RadialWavefunction& w, double r);

/// Number of zeros of the polynomial part on (0, inf), by a Sturm chain on
/// the (low-degree, well-scaled) coefficients. The prefactor never vanishes
/// there, so these are exactly the nodes of u.
int count_nodes(const RadialWavefunction& w);

/// Correctness certificate: max over a logarithmic grid of
///   | -u''/2 + [ (m^2-1/4)/(2r^2) + w^2 r^2/2 + c/(2r) - eps ] u | / max|u|
/// with u'' taken analytically. c = coulomb_strength lets the same check run
/// against the pure-oscillator operator (c = 0).
double ode_residual(const RadialWavefunction& w, double eps_ha,
                    double coulomb_strength = 1.0);

}  // namespace qdot::wavefunction
