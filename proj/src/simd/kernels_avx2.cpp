#include <immintrin.h>

#include <array>
#include <cmath>

#include "double_double.hpp"
#include "graetz/simd/kernels.hpp"

// Four-lane mirror of kernels_scalar.cpp. Every floating-point operation is
// issued in the same order as the scalar reference so the results are
// bit-identical; only the control flow is masked.

namespace graetz::simd::avx2 {

namespace {

struct Vdd {
  __m256d hi;
  __m256d lo;
};

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline Vdd two_sum(__m256d a, __m256d b) {
  __m256d s = _mm256_add_pd(a, b);
  __m256d bb = _mm256_sub_pd(s, a);
  __m256d e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)), _mm256_sub_pd(b, bb));
  return {s, e};
}

inline Vdd quick_two_sum(__m256d a, __m256d b) {
  __m256d s = _mm256_add_pd(a, b);
  __m256d e = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
  return {s, e};
}

inline Vdd two_prod(__m256d a, __m256d b) {
  __m256d p = _mm256_mul_pd(a, b);
  __m256d e = _mm256_fmsub_pd(a, b, p);
  return {p, e};
}

inline Vdd add(Vdd x, Vdd y) {
  Vdd s = two_sum(x.hi, y.hi);
  Vdd t = two_sum(x.lo, y.lo);
  __m256d e = _mm256_add_pd(s.lo, t.hi);
  s = quick_two_sum(s.hi, e);
  e = _mm256_add_pd(s.lo, t.lo);
  return quick_two_sum(s.hi, e);
}

inline Vdd mul(Vdd x, __m256d y) {
  Vdd p = two_prod(x.hi, y);
  __m256d e = _mm256_add_pd(p.lo, _mm256_mul_pd(x.lo, y));
  return quick_two_sum(p.hi, e);
}

inline Vdd mul(Vdd x, Vdd y) {
  Vdd p = two_prod(x.hi, y.hi);
  __m256d cross = _mm256_add_pd(_mm256_mul_pd(x.hi, y.lo), _mm256_mul_pd(x.lo, y.hi));
  __m256d e = _mm256_add_pd(p.lo, cross);
  return quick_two_sum(p.hi, e);
}

inline Vdd div(Vdd x, Vdd y) {
  __m256d q1 = _mm256_div_pd(x.hi, y.hi);
  Vdd p = mul(y, q1);
  Vdd r = two_sum(x.hi, _mm256_sub_pd(_mm256_setzero_pd(), p.hi));
  __m256d rl = _mm256_add_pd(_mm256_sub_pd(r.lo, p.lo), x.lo);
  __m256d q2 = _mm256_div_pd(_mm256_add_pd(r.hi, rl), y.hi);
  return quick_two_sum(q1, q2);
}

inline Vdd blend(Vdd keep, Vdd take, __m256d mask) {
  return {_mm256_blendv_pd(keep.hi, take.hi, mask), _mm256_blendv_pd(keep.lo, take.lo, mask)};
}

inline Vdd broadcast(dd::Real v) { return {_mm256_set1_pd(v.hi), _mm256_set1_pd(v.lo)}; }

void sum_block(double a, double b, const double* xs, double tol, std::size_t max_terms,
               double* value, SeriesStatus* status) {
  const __m256d x = _mm256_loadu_pd(xs);
  const __m256d decay_from = _mm256_add_pd(_mm256_set1_pd(std::fabs(a)), vabs(x));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vtol = _mm256_set1_pd(tol);
  const __m256d zero = _mm256_setzero_pd();

  Vdd term{one, zero};
  Vdd sum{one, zero};
  std::array<std::int32_t, 4> terms{1, 1, 1, 1};
  std::array<bool, 4> converged{};
  int active = 0xF;

  for (std::size_t n = 0; active != 0; ++n) {
    const double nd = static_cast<double>(n);
    const __m256d live = _mm256_castsi256_pd(_mm256_set_epi64x(
        (active & 8) ? -1 : 0, (active & 4) ? -1 : 0, (active & 2) ? -1 : 0, (active & 1) ? -1 : 0));

    // numerator (a + n) x per lane; denominator (b + n)(n + 1) shared
    Vdd num = mul(broadcast(dd::two_sum(a, nd)), x);
    Vdd den = broadcast(dd::mul(dd::two_sum(b, nd), nd + 1.0));
    term = blend(term, mul(term, div(num, den)), live);

    const int vanished = _mm256_movemask_pd(_mm256_cmp_pd(term.hi, zero, _CMP_EQ_OQ)) & active;
    for (int l = 0; l < 4; ++l)
      if (vanished & (1 << l)) converged[l] = true;
    active &= ~vanished;
    if (active == 0) break;
    if (static_cast<std::size_t>(n) + 1 >= max_terms) break;

    const __m256d adding = _mm256_castsi256_pd(_mm256_set_epi64x(
        (active & 8) ? -1 : 0, (active & 4) ? -1 : 0, (active & 2) ? -1 : 0, (active & 1) ? -1 : 0));
    sum = blend(sum, add(sum, term), adding);
    for (int l = 0; l < 4; ++l)
      if (active & (1 << l)) terms[l] = static_cast<std::int32_t>(n) + 2;

    const __m256d at = vabs(term.hi);
    const __m256d as = vabs(sum.hi);
    const __m256d armed = _mm256_cmp_pd(_mm256_set1_pd(nd + 1.0), decay_from, _CMP_GT_OQ);
    const __m256d rel = _mm256_cmp_pd(at, _mm256_mul_pd(vtol, as), _CMP_LE_OQ);
    const __m256d abs_ok = _mm256_cmp_pd(at, vtol, _CMP_LE_OQ);
    const __m256d big = _mm256_cmp_pd(as, one, _CMP_GE_OQ);
    const __m256d small = _mm256_blendv_pd(abs_ok, rel, big);
    const int done = _mm256_movemask_pd(_mm256_and_pd(armed, small)) & active;
    for (int l = 0; l < 4; ++l)
      if (done & (1 << l)) converged[l] = true;
    active &= ~done;
  }

  _mm256_storeu_pd(value, _mm256_add_pd(sum.hi, sum.lo));
  for (int l = 0; l < 4; ++l) status[l] = {terms[l], converged[l]};
}

}  // namespace

void kummer_series(double a, double b, std::span<const double> x, double tol,
                   std::size_t max_terms, std::span<double> value,
                   std::span<SeriesStatus> status) {
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) sum_block(a, b, &x[i], tol, max_terms, &value[i], &status[i]);
  if (i < x.size())
    scalar::kummer_series(a, b, x.subspan(i), tol, max_terms, value.subspan(i), status.subspan(i));
}

void mode_sum(std::span<const double> weights, std::span<const double> table, std::size_t stride,
              std::span<double> out) {
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t n = 0; n < weights.size(); ++n) {
      __m256d w = _mm256_set1_pd(weights[n]);
      __m256d t = _mm256_loadu_pd(&table[n * stride + i]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(w, t));
    }
    _mm256_storeu_pd(&out[i], acc);
  }
  if (i < out.size()) scalar::mode_sum(weights, table.subspan(i), stride, out.subspan(i));
}

}  // namespace graetz::simd::avx2
