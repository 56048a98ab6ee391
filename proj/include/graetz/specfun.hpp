#pragma once

// Rising factorial and Kummer's confluent hypergeometric function M(a, b, x).

#include <cstddef>
#include <span>

namespace graetz {

struct KummerOptions {
  double tol = 1e-15;
  std::size_t max_terms = 500;
};

struct KummerEval {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
};

/// Arguments below this are evaluated through M(a,b,x) = e^x M(b-a,b,-x).
inline constexpr double kKummerTransformBelow = -1.0;

/// xi (xi+1) ... (xi+n-1); exactly 1 for n = 0.
double pochhammer(double xi, std::size_t n);

/// Sums the series without throwing on non-convergence; the caller inspects
/// `converged`. Throws DomainError for b in {0, -1, -2, ...} or tol <= 0.
KummerEval kummer_m_unchecked(double a, double b, double x, KummerOptions opts = {});

/// M(a, b, x). Throws ConvergenceError when max_terms is exhausted.
KummerEval kummer_m(double a, double b, double x, KummerOptions opts = {});

/// dM/dx = (a/b) M(a+1, b+1, x).
double kummer_m_dx(double a, double b, double x, KummerOptions opts = {});

/// M(a, b, x[i]) for every i, through the runtime-selected SIMD kernel.
/// Bit-identical to calling kummer_m(a, b, x[i]).value point by point.
void kummer_m_batch(double a, double b, std::span<const double> x, std::span<double> out,
                    KummerOptions opts = {});

}  // namespace graetz
