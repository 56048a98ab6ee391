#pragma once

// Command-line surface: eigenvalue tables, temperature profiles, bulk and
// Nusselt curves, and the oracle validation run. Tables go out as CSV or
// JSON with shortest round-trip number formatting.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "graetz/config.hpp"

namespace graetz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

enum class Format { csv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> integral;  // per column: print as an integer
  std::vector<std::vector<double>> rows;
};

/// Shortest representation that parses back to the same double; never
/// locale dependent.
std::string format_number(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

/// Columns n, lambda, lambda_sq, C_n, dR_dr_at_1.
Table cmd_eigen(std::size_t count, const SolverConfig& config);

/// Columns r, T on r = i / (nr - 1).
Table cmd_profile(double z, std::size_t nr, const SolverConfig& config);

/// Columns z, T_bulk, Nu on log-spaced z in [z_min, z_max].
Table cmd_nusselt(double z_min, double z_max, std::size_t points, const SolverConfig& config);

struct CheckResult {
  std::string name;
  double measured = 0.0;  // NaN when the check could not run
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

inline constexpr double kEigenvalueTolerance = 1e-8;
inline constexpr double kFieldTolerance = 1e-3;
inline constexpr double kFieldZMin = 0.01;

/// Spectral eigenvalues vs RK4 shooting, and spectral field vs
/// Crank-Nicolson. Numerical failures are recorded as failed checks.
ValidationReport cmd_validate(const SolverConfig& config, const OracleConfig& oracle);

void write_report(const ValidationReport& report, Format format, std::ostream& out);

/// Parses argv and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graetz::cli
