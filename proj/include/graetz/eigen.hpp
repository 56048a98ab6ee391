#pragma once

// Eigenvalues and eigenfunctions of the Graetz radial problem
//
//   -(1/r) (r R')' = lambda^2 (1 - r^2) R,   R'(0) = 0,   R(1) = 0,
//
// whose regular solution is R(r) = exp(-lambda r^2 / 2) M(1/2 - lambda/4, 1, lambda r^2),
// normalized so that R(0) = 1. Throughout, `lambda` is the square root of the
// Sturm-Liouville eigenvalue.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graetz/config.hpp"

namespace graetz {

struct EigenMode {
  std::size_t index = 0;
  double lambda = 0.0;
  std::optional<double> coefficient;  // filled when the series solution is built
  double wall_slope = 0.0;            // R'(1)
};

struct Spectrum {
  std::vector<EigenMode> modes;
  double solver_tol = 0.0;
  double bracket_step = 0.0;
};

using Bracket = std::pair<double, double>;

/// Largest |R(1)| accepted at a refined root.
inline constexpr double kRootResidual = 1e-10;

/// Wall value R(1; lambda) = exp(-lambda/2) M(1/2 - lambda/4, 1, lambda).
double eigencondition(double lambda, const SolverConfig& config = {});

/// Every [k*step, (k+1)*step] within [0, lambda_max] across which the
/// eigencondition changes sign.
std::vector<Bracket> bracket_scan(double lambda_max, double step, const SolverConfig& config = {});

/// Bisects to width <= tol; throws ConvergenceError after 200 iterations or
/// if the residual at the result exceeds kRootResidual.
double refine_root(Bracket bracket, double tol, const SolverConfig& config = {});

/// The first `count` modes, ascending, with wall slopes filled in.
Spectrum compute_spectrum(std::size_t count, const SolverConfig& config = {});

double eigenfunction_eval(const EigenMode& mode, double r, const SolverConfig& config = {});
double eigenfunction_deriv(const EigenMode& mode, double r, const SolverConfig& config = {});

/// eigenfunction_eval at every r, bit-identical to the pointwise calls.
void eigenfunction_eval(const EigenMode& mode, std::span<const double> r, std::span<double> out,
                        const SolverConfig& config = {});

}  // namespace graetz
