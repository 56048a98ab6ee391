#include <cmath>

#include "double_double.hpp"
#include "graetz/simd/kernels.hpp"

namespace graetz::simd::scalar {

namespace {

// Sums one series. The convergence test only arms once n + 1 > |a| + |x|,
// past which term magnitudes decay monotonically; before that a term can be
// transiently tiny when a sits close to a negative integer.
void sum_one(double a, double b, double x, double tol, std::size_t max_terms, double& value,
             SeriesStatus& status) {
  const double decay_from = std::fabs(a) + std::fabs(x);
  dd::Real term{1.0, 0.0};
  dd::Real sum{1.0, 0.0};
  std::int32_t terms = 1;
  bool converged = false;
  for (std::size_t n = 0;; ++n) {
    const double nd = static_cast<double>(n);
    dd::Real num = dd::mul(dd::two_sum(a, nd), x);
    dd::Real den = dd::mul(dd::two_sum(b, nd), nd + 1.0);
    term = dd::mul(term, dd::div(num, den));
    if (term.hi == 0.0) {
      converged = true;
      break;
    }
    if (static_cast<std::size_t>(terms) >= max_terms) break;
    sum = dd::add(sum, term);
    ++terms;
    const double at = std::fabs(term.hi);
    const double as = std::fabs(sum.hi);
    const bool armed = nd + 1.0 > decay_from;
    const bool small = as >= 1.0 ? at <= tol * as : at <= tol;
    if (armed && small) {
      converged = true;
      break;
    }
  }
  value = sum.hi + sum.lo;
  status = {terms, converged};
}

}  // namespace

void kummer_series(double a, double b, std::span<const double> x, double tol,
                   std::size_t max_terms, std::span<double> value,
                   std::span<SeriesStatus> status) {
  for (std::size_t i = 0; i < x.size(); ++i) sum_one(a, b, x[i], tol, max_terms, value[i], status[i]);
}

void mode_sum(std::span<const double> weights, std::span<const double> table, std::size_t stride,
              std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::size_t n = 0; n < weights.size(); ++n) acc = acc + weights[n] * table[n * stride + i];
    out[i] = acc;
  }
}

}  // namespace graetz::simd::scalar
