#pragma once

#include <stdexcept>
#include <string>

namespace qdot {

/// Base class for all solver errors so callers can catch one type.
class QdotError : public std::runtime_error {
 public:
  explicit QdotError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user-facing input (bad j/m, malformed material, bad range...).
class InvalidInput : public QdotError {
 public:
  explicit InvalidInput(const std::string& what) : QdotError(what) {}
};

/// The requested closed-form level exists only for confining fields weaker
/// than the requested one: the exactly solvable frequency falls below the
/// static confinement, so no magnetic field realizes it.
class NoQesField : public QdotError {
 public:
  explicit NoQesField(const std::string& what) : QdotError(what) {}
};

/// A polynomial-series termination check failed: the supplied frequency is
/// not one of the exactly solvable values for the given (j, m).
class NotQesFrequency : public QdotError {
 public:
  explicit NotQesFrequency(const std::string& what) : QdotError(what) {}
};

/// The finite-difference reference solver could not certify its eigenvalues
/// to the requested accuracy on the admissible grids.
class ConvergenceFailure : public QdotError {
 public:
  explicit ConvergenceFailure(const std::string& what) : QdotError(what) {}
};

}  // namespace qdot
