#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdot/spectrum.hpp"
#include "qdot/units.hpp"

namespace qdot::cli {

enum class Mode { physical, paper };
enum class Format { csv, json };

/// Shared settings every command receives besides its own inputs.
struct RunConfig {
  units::MaterialParams material{0.067, 12.4, 4.0};  // GaAs preset, 4 meV
  Mode mode = Mode::physical;
  Format format = Format::csv;
  int jmax = 5;  // table extent
  int mmax = 2;
};

/// Scale calibration for the replication mode of `table`.
///
/// The reference tabulation this project replicates quotes its numbers in an
/// energy unit that is never stated and cannot be reconciled with any
/// standard unit system, so its absolute values are reproducible only after
/// fixing one overall scale. The scale is recovered at runtime by inverting
/// omega_c = 2 sqrt(omega^2 - omega0^2) on a single stored reference entry;
/// every other row is then a genuine prediction. Physical mode never touches
/// this calibration.
struct ReplicationCalibration {
  double lambda_squared;   // eta * omega, the row-independent invariant
  double omega0;           // confinement in the same table units
  std::string fitted_from; // which reference entry fixed the scale
};

ReplicationCalibration replication_calibration();

/// One row of the `table` command.
struct TableRow {
  int j;
  int m;
  int n_r;
  double omega_c;  // table units in replication mode, meV in physical mode
  double e_r;
  bool feasible;   // physical mode only: false when omega < omega0
};

/// Dimensionless closed-form table in the calibrated replication units.
std::vector<TableRow> replication_table(int jmax, int mmax);

/// The same rows in meV for the configured material.
std::vector<TableRow> physical_table(const RunConfig& config);

/// Serializes one solution to a JSON object string; laboratory-unit fields
/// are derived from the material scales.
std::string solution_to_json(const spectrum::QesSolution& sol,
                             const units::Scales& scales);

/// Inverse of solution_to_json: restores every QesSolution field.
spectrum::QesSolution solution_from_json(const std::string& text);

// Command bodies. Each writes rendered rows to `out` and returns the process
// exit code (0 success, 1 verification failure, 2 no solvable field,
// 3 invalid input); argument errors are reported by throwing InvalidInput.
int cmd_solve(int j, int m, const RunConfig& config, std::ostream& out);
int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_verify(int j, int m, const RunConfig& config, std::ostream& out);
int cmd_scan(int j, int m, double b_min_tesla, double b_max_tesla,
             int b_steps, const RunConfig& config, std::ostream& out);
int cmd_constants(const RunConfig& config, std::ostream& out);

/// Full argv entry point: parsing, config file, exit-code mapping.
int run(int argc, const char* const* argv);

}  // namespace qdot::cli
