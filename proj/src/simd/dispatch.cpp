#include "graetz/errors.hpp"
#include "graetz/simd/kernels.hpp"

namespace graetz::simd {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::kummer_series, &scalar::mode_sum};
#if defined(GRAETZ_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::kummer_series, &avx2::mode_sum};
#endif

bool cpu_has_avx2() {
#if defined(GRAETZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
  }
  return false;
}

Isa detected_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) throw DomainError("kernels for " + std::string(isa_name(isa)) + " unavailable");
#if defined(GRAETZ_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels_for(detected_isa());
  return table;
}

}  // namespace graetz::simd
