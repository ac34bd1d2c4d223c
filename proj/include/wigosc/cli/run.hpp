#pragma once

#include "wigosc/table.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wigosc::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidConfig = 2,
  kUnknownCommand = 3,
  kConvergenceFailure = 4,
  kOutputError = 5,
};

/// Everything one invocation needs. Optional fields fall back to a
/// per-command default when unset.
struct RunConfig {
  std::string command;
  double n_param = 1.0;
  double omega_t_max = 20.0;
  double omega_t = 1.0;                   ///< fixed time for phase-dist / transition
  std::optional<std::size_t> grid_points;
  std::optional<std::size_t> dim;
  std::size_t initial_fock = 0;
  std::optional<double> u;                ///< parametric growth rate (1/s)
  double ebar = 0.0;                      ///< parametric modulation depth
  double f = 0.0;                         ///< parametric detuning (rad/s)
  std::optional<double> t_max;            ///< s
  double eps0 = 0.01;                     ///< adiabatic modulation depth
  double slow_rate = 0.01;                ///< adiabatic modulation rate (rad/s)
  std::uint64_t seed = 42;
  std::size_t trajectories = 100000;
  std::size_t partitions = 1;
  std::string output = "-";
  std::string format = "csv";
};

const std::vector<std::string>& known_commands();

/// Set one field from its flag name (without dashes) and a string value.
/// Throws std::invalid_argument for unknown keys or unparseable values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Plain key=value lines; '#' starts a comment. Throws std::invalid_argument
/// when the file cannot be read or a line is malformed.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Range checks. Throws std::invalid_argument.
void validate(const RunConfig& cfg);

/// Compute the table for cfg.command. Throws std::invalid_argument for bad
/// configuration and ConvergenceError for numerical failures.
Table build_table(const RunConfig& cfg);

/// Validate, compute and write. Diagnostics go to `diag`; the return value is
/// an ExitCode.
int run(const RunConfig& cfg, std::ostream& diag);

/// Ground-state survival of the averaged parametric oscillator, 1/cosh(ut).
double parametric_survival(double u_t);

/// The same quantity as the angular integral
///   int dphi/pi [1 + e^{2ut} cos^2(phi + pi/4) + e^{-2ut} sin^2(phi + pi/4)]^{-1}
/// over one period, evaluated by adaptive quadrature.
double parametric_survival_quadrature(double u_t);

}  // namespace wigosc::cli
