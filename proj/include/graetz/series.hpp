#pragma once

// Spectral solution of the Graetz problem
//
//   T(r, z) = sum_n C_n R_n(r) exp(-lambda_n^2 z),
//
// with C_n the projection of the unit inlet profile onto R_n under the
// Sturm-Liouville weight r (1 - r^2).

#include <cstddef>
#include <span>
#include <vector>

#include "graetz/config.hpp"
#include "graetz/eigen.hpp"
#include "graetz/field.hpp"

namespace graetz {

/// Gauss-Legendre rule on [0, 1]; weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t order = 0;
};

inline constexpr std::size_t kMinQuadratureOrder = 2;
inline constexpr std::size_t kMaxQuadratureOrder = 512;

QuadratureRule gauss_rule(std::size_t order);

/// Quadrature order build_solution actually uses for `count` modes: the
/// configured order, raised so that the highest mode stays resolved.
std::size_t effective_quadrature_order(std::size_t count, std::size_t configured);

class SeriesSolution {
 public:
  SeriesSolution(Spectrum spectrum, std::size_t quadrature_order, SolverConfig config);

  const Spectrum& spectrum() const { return spectrum_; }
  const std::vector<EigenMode>& modes() const { return spectrum_.modes; }
  std::size_t truncation() const { return spectrum_.modes.size(); }
  std::size_t quadrature_order() const { return quadrature_order_; }
  const SolverConfig& config() const { return config_; }

 private:
  Spectrum spectrum_;
  std::size_t quadrature_order_;
  SolverConfig config_;
};

/// C_n = <w, R_n> / <w R_n, R_n> with w = r (1 - r^2). Throws DegenerateError
/// when the norm integral is below 1e-14.
double mode_coefficient(const EigenMode& mode, const QuadratureRule& rule,
                        const SolverConfig& config = {});

SeriesSolution build_solution(std::size_t count, const SolverConfig& config = {});

FieldSample temperature_at(const SeriesSolution& sol, double r, double z);

/// T on the tensor grid r x z. Radial eigenfunction values are tabulated
/// once; each axial station is one mode sum over all radii.
FieldGrid sample_field(const SeriesSolution& sol, std::span<const double> r,
                       std::span<const double> z);

/// Mixing-cup temperature from the wall-slope identity
///   T_b(z) = 4 sum_n C_n exp(-lambda_n^2 z) (-R_n'(1) / lambda_n^2).
double bulk_temperature(const SeriesSolution& sol, double z);

/// Mixing-cup temperature 4 * int_0^1 r (1 - r^2) T(r, z) dr by quadrature.
double bulk_temperature_quadrature(const SeriesSolution& sol, double z, const QuadratureRule& rule);

/// Nu(z) = -2 T_r(1, z) / T_b(z), z > 0.
double local_nusselt(const SeriesSolution& sol, double z);

}  // namespace graetz
