#include "graetz/config.hpp"

#include "graetz/errors.hpp"

namespace graetz {

void SolverConfig::validate() const {
  if (mode_count == 0) throw DomainError("mode_count must be positive");
  if (!(root_tol > 0.0)) throw DomainError("root_tol must be positive");
  if (quadrature_order == 0) throw DomainError("quadrature_order must be positive");
  if (!(bracket_step > 0.0) || bracket_step > 1.0)
    throw DomainError("bracket_step must lie in (0, 1]");
  if (!(kummer_tol > 0.0)) throw DomainError("kummer_tol must be positive");
  if (kummer_max_terms == 0) throw DomainError("kummer_max_terms must be positive");
}

void OracleConfig::validate() const {
  if (!(rk4_step > 0.0) || rk4_step > 1e-3) throw DomainError("rk4_step must lie in (0, 1e-3]");
  if (fd_nr < 51) throw DomainError("fd_nr must be at least 51");
  if (fd_nz < 101) throw DomainError("fd_nz must be at least 101");
  if (!(fd_zmax > 0.0)) throw DomainError("fd_zmax must be positive");
}

}  // namespace graetz
