#pragma once

// Unevaluated sum hi + lo of two doubles (about 106 significant bits).
// Error-free transformations follow the classic Dekker/Knuth forms; the
// operation sequence here is mirrored exactly by the AVX2 kernels so that
// both paths round identically.

#include <cmath>

namespace graetz::simd::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;
};

inline Real two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline Real quick_two_sum(double a, double b) {
  double s = a + b;
  double e = b - (s - a);
  return {s, e};
}

inline Real two_prod(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return {p, e};
}

inline Real add(Real x, Real y) {
  Real s = two_sum(x.hi, y.hi);
  Real t = two_sum(x.lo, y.lo);
  double e = s.lo + t.hi;
  s = quick_two_sum(s.hi, e);
  e = s.lo + t.lo;
  return quick_two_sum(s.hi, e);
}

inline Real mul(Real x, double y) {
  Real p = two_prod(x.hi, y);
  double e = p.lo + x.lo * y;
  return quick_two_sum(p.hi, e);
}

inline Real mul(Real x, Real y) {
  Real p = two_prod(x.hi, y.hi);
  double cross = x.hi * y.lo + x.lo * y.hi;
  double e = p.lo + cross;
  return quick_two_sum(p.hi, e);
}

inline Real div(Real x, Real y) {
  double q1 = x.hi / y.hi;
  Real p = mul(y, q1);
  Real r = two_sum(x.hi, -p.hi);
  double rl = (r.lo - p.lo) + x.lo;
  double q2 = (r.hi + rl) / y.hi;
  return quick_two_sum(q1, q2);
}

}  // namespace graetz::simd::dd
