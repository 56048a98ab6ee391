#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "graetz/simd/kernels.hpp"

using namespace graetz::simd;

namespace {

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::vector<Isa> variants() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_available(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

}  // namespace

TEST_CASE("dispatcher reports a usable ISA") {
  const Isa isa = detected_isa();
  CHECK(isa_available(isa));
  CHECK(kernels().isa == isa);
  CHECK(kernels_for(Isa::scalar).isa == Isa::scalar);
  MESSAGE("active kernels: " << isa_name(isa));
}

TEST_CASE("kummer_series variants are bit-identical to the scalar reference") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ua(-55.0, 8.0), ux(-1.0, 210.0);
  const auto& ref = kernels_for(Isa::scalar);
  for (Isa isa : variants()) {
    const auto& k = kernels_for(isa);
    for (std::size_t size : {1u, 3u, 4u, 5u, 8u, 13u, 64u, 101u}) {
      const double a = ua(rng);
      const double b = static_cast<double>(1 + size % 3);
      std::vector<double> x(size);
      for (auto& v : x) v = ux(rng);
      if (size > 4) x[2] = 0.0;  // lane that terminates at once next to live lanes
      std::vector<double> want(size), got(size);
      std::vector<SeriesStatus> ws(size), gs(size);
      ref.kummer_series(a, b, x, 1e-15, 500, want, ws);
      k.kummer_series(a, b, x, 1e-15, 500, got, gs);
      for (std::size_t i = 0; i < size; ++i) {
        CHECK_MESSAGE(bits(got[i]) == bits(want[i]), isa_name(isa) << " a=" << a << " x=" << x[i]);
        CHECK(gs[i].terms == ws[i].terms);
        CHECK(gs[i].converged == ws[i].converged);
      }
    }
  }
}

TEST_CASE("kummer_series variants agree on the term cap") {
  const std::vector<double> x{5.0, 10.0, 0.0, 20.0, 1.0};
  for (Isa isa : variants()) {
    std::vector<double> v(x.size());
    std::vector<SeriesStatus> st(x.size());
    kernels_for(isa).kummer_series(1.0, 1.0, x, 1e-15, 6, v, st);
    CHECK_FALSE(st[0].converged);
    CHECK(st[0].terms == 6);
    CHECK(st[2].converged);
    CHECK(st[2].terms == 1);
    CHECK(v[2] == 1.0);
  }
}

TEST_CASE("mode_sum variants are bit-identical to the scalar reference") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (Isa isa : variants()) {
    for (std::size_t nr : {1u, 4u, 7u, 401u}) {
      const std::size_t modes = 23;
      std::vector<double> w(modes), table(modes * nr), want(nr), got(nr);
      for (auto& v : w) v = nd(rng);
      for (auto& v : table) v = nd(rng);
      kernels_for(Isa::scalar).mode_sum(w, table, nr, want);
      kernels_for(isa).mode_sum(w, table, nr, got);
      for (std::size_t i = 0; i < nr; ++i) CHECK(bits(got[i]) == bits(want[i]));
    }
  }
}

TEST_CASE("mode_sum computes the weighted column sums") {
  const std::vector<double> w{2.0, -1.0};
  const std::vector<double> table{1.0, 2.0, 3.0, 10.0, 20.0, 30.0};
  std::vector<double> out(3);
  kernels().mode_sum(w, table, 3, out);
  CHECK(out == std::vector<double>{-8.0, -16.0, -24.0});
}
