#include "graetz/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "graetz/errors.hpp"
#include "graetz/simd/kernels.hpp"

namespace graetz {

namespace {

void check_point(double r, double z) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius " + std::to_string(r) + " outside [0, 1]");
  if (!(z >= 0.0)) throw DomainError("axial position " + std::to_string(z) + " is negative");
}

// C_n exp(-lambda_n^2 z) for every mode.
std::vector<double> decayed_coefficients(const SeriesSolution& sol, double z) {
  std::vector<double> w;
  w.reserve(sol.truncation());
  for (const auto& m : sol.modes()) w.push_back(*m.coefficient * std::exp(-m.lambda * m.lambda * z));
  return w;
}

}  // namespace

QuadratureRule gauss_rule(std::size_t order) {
  if (order < kMinQuadratureOrder || order > kMaxQuadratureOrder)
    throw DomainError("gauss_rule: order " + std::to_string(order) + " outside [2, 512]");
  const std::size_t n = order;
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // P_n(t) and P_n'(t) by the three-term recurrence.
  auto legendre = [n](double t) {
    double p0 = 1.0, p1 = t;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kd = static_cast<double>(k);
      const double p2 = ((2.0 * kd - 1.0) * t * p1 - (kd - 1.0) * p0) / kd;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, static_cast<double>(n) * (t * p1 - p0) / (t * t - 1.0)};
  };
  // Roots by Newton from the Tricomi initial guess, filled as symmetric pairs.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(t);
      const double dt = p / dp;
      t -= dt;
      if (std::fabs(dt) <= 1e-16) break;
    }
    const double dp = legendre(t).second;
    const double w = 1.0 / ((1.0 - t * t) * dp * dp);  // half the weight on [-1, 1]
    rule.nodes[i] = 0.5 * (1.0 - t);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + t);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

std::size_t effective_quadrature_order(std::size_t count, std::size_t configured) {
  return std::clamp(std::max(configured, 4 * count - std::min<std::size_t>(4 * count, 16)),
                    kMinQuadratureOrder, kMaxQuadratureOrder);
}

SeriesSolution::SeriesSolution(Spectrum spectrum, std::size_t quadrature_order, SolverConfig config)
    : spectrum_(std::move(spectrum)), quadrature_order_(quadrature_order), config_(config) {
  for (const auto& m : spectrum_.modes)
    if (!m.coefficient || !std::isfinite(*m.coefficient))
      throw DomainError("SeriesSolution: mode " + std::to_string(m.index) + " has no finite coefficient");
}

double mode_coefficient(const EigenMode& mode, const QuadratureRule& rule, const SolverConfig& config) {
  std::vector<double> values(rule.nodes.size());
  eigenfunction_eval(mode, rule.nodes, values, config);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double r = rule.nodes[j];
    const double wr = rule.weights[j] * r * (1.0 - r * r);
    num += wr * values[j];
    den += wr * values[j] * values[j];
  }
  if (den < 1e-14)
    throw DegenerateError("mode_coefficient: norm integral " + std::to_string(den) + " for mode " +
                          std::to_string(mode.index));
  return num / den;
}

SeriesSolution build_solution(std::size_t count, const SolverConfig& config) {
  Spectrum spectrum = compute_spectrum(count, config);
  const std::size_t order = effective_quadrature_order(count, config.quadrature_order);
  const QuadratureRule rule = gauss_rule(order);
  for (auto& m : spectrum.modes) m.coefficient = mode_coefficient(m, rule, config);
  return SeriesSolution(std::move(spectrum), order, config);
}

FieldSample temperature_at(const SeriesSolution& sol, double r, double z) {
  check_point(r, z);
  const auto w = decayed_coefficients(sol, z);
  double acc = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n)
    acc = acc + w[n] * eigenfunction_eval(sol.modes()[n], r, sol.config());
  return {r, z, acc};
}

FieldGrid sample_field(const SeriesSolution& sol, std::span<const double> r, std::span<const double> z) {
  for (double zk : z) check_point(0.0, zk);
  FieldGrid grid;
  grid.r.assign(r.begin(), r.end());
  grid.z.assign(z.begin(), z.end());
  grid.T.resize(r.size() * z.size());

  const std::size_t nr = r.size();
  std::vector<double> table(sol.truncation() * nr);
  for (std::size_t n = 0; n < sol.truncation(); ++n)
    eigenfunction_eval(sol.modes()[n], r, std::span(table).subspan(n * nr, nr), sol.config());

  const auto& kernels = simd::kernels();
  for (std::size_t k = 0; k < z.size(); ++k) {
    const auto w = decayed_coefficients(sol, z[k]);
    kernels.mode_sum(w, table, nr, std::span(grid.T).subspan(k * nr, nr));
  }
  return grid;
}

double bulk_temperature(const SeriesSolution& sol, double z) {
  if (!(z >= 0.0)) throw DomainError("bulk_temperature: z must be non-negative");
  double acc = 0.0;
  for (const auto& m : sol.modes())
    acc += *m.coefficient * std::exp(-m.lambda * m.lambda * z) * (-m.wall_slope / (m.lambda * m.lambda));
  return 4.0 * acc;
}

double bulk_temperature_quadrature(const SeriesSolution& sol, double z, const QuadratureRule& rule) {
  const double zs[] = {z};
  const FieldGrid g = sample_field(sol, rule.nodes, zs);
  double acc = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double r = rule.nodes[j];
    acc += rule.weights[j] * r * (1.0 - r * r) * g.value(0, j);
  }
  return 4.0 * acc;
}

double local_nusselt(const SeriesSolution& sol, double z) {
  if (!(z > 0.0)) throw DomainError("local_nusselt: z must be positive");
  const double tb = bulk_temperature(sol, z);
  if (tb < 1e-300) throw DegenerateError("local_nusselt: bulk temperature underflow at z = " + std::to_string(z));
  double slope = 0.0;
  for (const auto& m : sol.modes())
    slope += *m.coefficient * std::exp(-m.lambda * m.lambda * z) * m.wall_slope;
  return -2.0 * slope / tb;
}

}  // namespace graetz
