#pragma once

// Brute-force reference solvers, independent of the special-function path:
// an RK4 shooting eigensolver for the radial problem and a Crank-Nicolson
// marcher for the full PDE
//
//   dT/dz = 1 / (1 - r^2) * (1/r) d/dr (r dT/dr),  T(r, 0) = 1,  T(1, z) = 0.
//
// Nothing here may call into specfun or eigen; compare_fields is the only
// bridge to the spectral solution.

#include <cstddef>
#include <vector>

#include "graetz/config.hpp"
#include "graetz/field.hpp"

namespace graetz {

class SeriesSolution;

struct TrajectoryPoint {
  double r = 0.0;
  double R = 0.0;
  double dR = 0.0;
};

struct ShootResult {
  double wall_value = 0.0;  // R(1)
  std::vector<TrajectoryPoint> trajectory;
};

/// Integrates -(1/r)(r R')' = lambda^2 (1 - r^2) R from r = step with the
/// regular start R = 1 - lambda^2 r^2 / 4, R' = -lambda^2 r / 2, up to r = 1.
ShootResult shoot_radial(double lambda, double step, bool keep_trajectory = true);

/// First `count` roots of R(1; lambda): scan in steps of 0.5, bisect to 1e-10.
std::vector<double> shoot_eigenvalues(std::size_t count, const OracleConfig& config = {});

/// Full (r, z) grid on r = i/(fd_nr-1), z = k*fd_zmax/(fd_nz-1).
/// Crank-Nicolson in z, started with four backward-Euler half steps to damp
/// the inlet/wall discontinuity.
FieldGrid fd_march(const OracleConfig& config = {});

/// max |T_spectral - T_fd| over grid nodes with z >= z_min (z_min >= 0.01).
double compare_fields(const SeriesSolution& spectral, const FieldGrid& fd, double z_min);

}  // namespace graetz
