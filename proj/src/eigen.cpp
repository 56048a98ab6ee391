#include "graetz/eigen.hpp"

#include <cmath>
#include <string>

#include "graetz/errors.hpp"
#include "graetz/specfun.hpp"

namespace graetz {

namespace {

KummerOptions kummer_opts(const SolverConfig& c) { return {c.kummer_tol, c.kummer_max_terms}; }

double kummer_a(double lambda) { return 0.5 - 0.25 * lambda; }

void check_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius " + std::to_string(r) + " outside [0, 1]");
}

constexpr int kMaxBisections = 200;

}  // namespace

double eigencondition(double lambda, const SolverConfig& config) {
  if (!(lambda >= 0.0)) throw DomainError("eigencondition: lambda must be non-negative");
  return std::exp(-0.5 * lambda) * kummer_m(kummer_a(lambda), 1.0, lambda, kummer_opts(config)).value;
}

std::vector<Bracket> bracket_scan(double lambda_max, double step, const SolverConfig& config) {
  if (!(step > 0.0)) throw DomainError("bracket_scan: step must be positive");
  if (!(lambda_max > step)) throw DomainError("bracket_scan: lambda_max must exceed step");
  std::vector<Bracket> out;
  double lo = 0.0;
  double g_lo = eigencondition(lo, config);
  for (std::size_t k = 1;; ++k) {
    const double hi = static_cast<double>(k) * step;
    if (hi > lambda_max) break;
    const double g_hi = eigencondition(hi, config);
    if (std::signbit(g_lo) != std::signbit(g_hi)) out.emplace_back(lo, hi);
    lo = hi;
    g_lo = g_hi;
  }
  return out;
}

double refine_root(Bracket bracket, double tol, const SolverConfig& config) {
  auto [lo, hi] = bracket;
  if (!(tol > 0.0)) throw DomainError("refine_root: tol must be positive");
  if (!(lo < hi)) throw DomainError("refine_root: empty bracket");
  double g_lo = eigencondition(lo, config);
  const double g_hi = eigencondition(hi, config);
  if (std::signbit(g_lo) == std::signbit(g_hi))
    throw DomainError("refine_root: no sign change across bracket");

  for (int it = 0; hi - lo > tol; ++it) {
    if (it == kMaxBisections)
      throw ConvergenceError("refine_root: bracket width above tolerance after 200 bisections");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double g_mid = eigencondition(mid, config);
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  const double residual = std::fabs(eigencondition(root, config));
  if (residual > kRootResidual)
    throw ConvergenceError("refine_root: residual " + std::to_string(residual) + " at lambda " +
                           std::to_string(root) + " exceeds 1e-10 (root_tol too loose?)");
  return root;
}

Spectrum compute_spectrum(std::size_t count, const SolverConfig& config) {
  if (count == 0) throw DomainError("compute_spectrum: count must be positive");
  config.validate();
  const double lambda_max = 4.0 * static_cast<double>(count) + 4.0;
  const auto brackets = bracket_scan(lambda_max, config.bracket_step, config);
  if (brackets.size() < count)
    throw ConvergenceError("compute_spectrum: found " + std::to_string(brackets.size()) +
                           " sign changes below lambda = " + std::to_string(lambda_max) +
                           ", need " + std::to_string(count));

  Spectrum s;
  s.solver_tol = config.root_tol;
  s.bracket_step = config.bracket_step;
  s.modes.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    EigenMode m;
    m.index = n;
    m.lambda = refine_root(brackets[n], config.root_tol, config);
    m.wall_slope = eigenfunction_deriv(m, 1.0, config);
    s.modes.push_back(m);
  }
  return s;
}

double eigenfunction_eval(const EigenMode& mode, double r, const SolverConfig& config) {
  check_radius(r);
  const double x = mode.lambda * r * r;
  return std::exp(-0.5 * x) * kummer_m(kummer_a(mode.lambda), 1.0, x, kummer_opts(config)).value;
}

void eigenfunction_eval(const EigenMode& mode, std::span<const double> r, std::span<double> out,
                        const SolverConfig& config) {
  if (out.size() != r.size()) throw DomainError("eigenfunction_eval: size mismatch");
  std::vector<double> x(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    check_radius(r[i]);
    x[i] = mode.lambda * r[i] * r[i];
  }
  kummer_m_batch(kummer_a(mode.lambda), 1.0, x, out, kummer_opts(config));
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = std::exp(-0.5 * x[i]) * out[i];
}

// d/dr [e^{-x/2} M(a,1,x)] with x = lambda r^2, dx/dr = 2 lambda r:
//   e^{-x/2} (2 lambda r) (M_x - M/2)
double eigenfunction_deriv(const EigenMode& mode, double r, const SolverConfig& config) {
  check_radius(r);
  if (r == 0.0) return 0.0;
  const double a = kummer_a(mode.lambda);
  const double x = mode.lambda * r * r;
  const auto opts = kummer_opts(config);
  const double m = kummer_m(a, 1.0, x, opts).value;
  const double mx = kummer_m_dx(a, 1.0, x, opts);
  return std::exp(-0.5 * x) * (2.0 * mode.lambda * r) * (mx - 0.5 * m);
}

}  // namespace graetz
