#pragma once

#include <functional>

namespace qdot::quadrature {

/// Adaptive panel integration of f over the finite interval [a, b].
///
/// Panels are evaluated with a 15-point Gauss-Legendre rule whose nodes are
/// generated at startup (Newton refinement of the Legendre roots, machine
/// precision); a panel is accepted when it agrees with its two halves within
/// the local error budget, in the usual embedded-estimate fashion. The
/// returned value satisfies |error| <= rel_tol*|integral| + abs_tol for
/// integrands smooth on panel interiors.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 0.0);

}  // namespace qdot::quadrature
