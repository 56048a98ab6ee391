#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, where the target supports it, an AVX2+FMA variant.
// Variants are required to agree bit-for-bit with the scalar reference;
// the dispatcher picks the widest one the running CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace graetz::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Per-point outcome of a Kummer series summation.
struct SeriesStatus {
  std::int32_t terms = 0;
  bool converged = false;
};

/// Sums M(a, b, x[i]) = sum_n (a)_n x^n / ((b)_n n!) directly (no argument
/// transformation) in double-double arithmetic, for a shared (a, b).
/// `value` and `status` must have x.size() entries. b must not be a
/// non-positive integer.
using KummerSeriesFn = void (*)(double a, double b, std::span<const double> x, double tol,
                                std::size_t max_terms, std::span<double> value,
                                std::span<SeriesStatus> status);

/// out[i] = sum_{n < weights.size()} weights[n] * table[n * stride + i],
/// accumulated in increasing n. out.size() <= stride.
using ModeSumFn = void (*)(std::span<const double> weights, std::span<const double> table,
                           std::size_t stride, std::span<double> out);

struct KernelTable {
  Isa isa;
  KummerSeriesFn kummer_series;
  ModeSumFn mode_sum;
};

/// Best ISA the running CPU supports and this build contains.
Isa detected_isa();

/// True when kernels for `isa` are compiled in and runnable here.
bool isa_available(Isa isa);

/// Kernel table for an explicit ISA; throws DomainError if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Kernel table selected once at first use from detected_isa().
const KernelTable& kernels();

namespace scalar {
void kummer_series(double a, double b, std::span<const double> x, double tol,
                   std::size_t max_terms, std::span<double> value,
                   std::span<SeriesStatus> status);
void mode_sum(std::span<const double> weights, std::span<const double> table, std::size_t stride,
              std::span<double> out);
}  // namespace scalar

namespace avx2 {
void kummer_series(double a, double b, std::span<const double> x, double tol,
                   std::size_t max_terms, std::span<double> value,
                   std::span<SeriesStatus> status);
void mode_sum(std::span<const double> weights, std::span<const double> table, std::size_t stride,
              std::span<double> out);
}  // namespace avx2

}  // namespace graetz::simd
