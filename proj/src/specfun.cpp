#include "graetz/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "graetz/errors.hpp"
#include "graetz/simd/kernels.hpp"

namespace graetz {

namespace {

bool is_nonpositive_integer(double b) { return b <= 0.0 && std::floor(b) == b; }

void check_args(double b, const KummerOptions& opts) {
  if (is_nonpositive_integer(b))
    throw DomainError("kummer_m: b = " + std::to_string(b) + " is a non-positive integer");
  if (!(opts.tol > 0.0)) throw DomainError("kummer_m: tol must be positive");
  if (opts.max_terms == 0) throw DomainError("kummer_m: max_terms must be positive");
}

[[noreturn]] void throw_unconverged(double a, double b, double x, std::size_t max_terms) {
  throw ConvergenceError("kummer_m(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                         std::to_string(x) + ") not converged within " +
                         std::to_string(max_terms) + " terms");
}

}  // namespace

double pochhammer(double xi, std::size_t n) {
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k) p *= xi + static_cast<double>(k);
  return p;
}

KummerEval kummer_m_unchecked(double a, double b, double x, KummerOptions opts) {
  check_args(b, opts);
  const bool transform = x < kKummerTransformBelow;
  const double aa = transform ? b - a : a;
  const double xx = transform ? -x : x;
  double value = 0.0;
  simd::SeriesStatus status;
  simd::scalar::kummer_series(aa, b, std::span(&xx, 1), opts.tol, opts.max_terms,
                              std::span(&value, 1), std::span(&status, 1));
  if (transform) value *= std::exp(x);
  return {value, static_cast<std::size_t>(status.terms), status.converged};
}

KummerEval kummer_m(double a, double b, double x, KummerOptions opts) {
  KummerEval r = kummer_m_unchecked(a, b, x, opts);
  if (!r.converged) throw_unconverged(a, b, x, opts.max_terms);
  return r;
}

double kummer_m_dx(double a, double b, double x, KummerOptions opts) {
  check_args(b, opts);
  if (a == 0.0) return 0.0;
  return (a / b) * kummer_m(a + 1.0, b + 1.0, x, opts).value;
}

void kummer_m_batch(double a, double b, std::span<const double> x, std::span<double> out,
                    KummerOptions opts) {
  check_args(b, opts);
  if (out.size() != x.size()) throw DomainError("kummer_m_batch: size mismatch");

  // Split into directly summed and transformed arguments; each group shares
  // one (a, b) pair, which is what the kernel vectorizes over.
  std::vector<std::size_t> direct_idx, flip_idx;
  std::vector<double> direct_x, flip_x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < kKummerTransformBelow) {
      flip_idx.push_back(i);
      flip_x.push_back(-x[i]);
    } else {
      direct_idx.push_back(i);
      direct_x.push_back(x[i]);
    }
  }

  const auto& k = simd::kernels();
  auto run = [&](double aa, const std::vector<std::size_t>& idx, const std::vector<double>& xs,
                 bool transformed) {
    if (idx.empty()) return;
    std::vector<double> vals(xs.size());
    std::vector<simd::SeriesStatus> st(xs.size());
    k.kummer_series(aa, b, xs, opts.tol, opts.max_terms, vals, st);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (!st[j].converged) throw_unconverged(a, b, x[idx[j]], opts.max_terms);
      out[idx[j]] = transformed ? vals[j] * std::exp(x[idx[j]]) : vals[j];
    }
  };
  run(a, direct_idx, direct_x, false);
  run(b - a, flip_idx, flip_x, true);
}

}  // namespace graetz
