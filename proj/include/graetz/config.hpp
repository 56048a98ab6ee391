#pragma once

#include <cstddef>

namespace graetz {

/// Every numerical knob of the spectral solver.
struct SolverConfig {
  std::size_t mode_count = 20;
  double root_tol = 1e-12;
  std::size_t quadrature_order = 64;
  double bracket_step = 0.5;
  double kummer_tol = 1e-15;
  std::size_t kummer_max_terms = 500;

  /// Throws DomainError unless every field is positive and bracket_step <= 1.
  void validate() const;
};

struct OracleConfig {
  double rk4_step = 1e-4;
  std::size_t fd_nr = 401;
  std::size_t fd_nz = 4001;
  double fd_zmax = 0.5;

  void validate() const;
};

}  // namespace graetz
