#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"
#include "simplest/kernels.hpp"

namespace simplest::kernels {

namespace {

const KernelTable kScalar{Isa::Scalar, &detail::trace_filter_scalar, &detail::algebra_mul_scalar};

#if SIMPLEST_HAVE_AVX2
const KernelTable kAvx2{Isa::Avx2, &detail::trace_filter_avx2, &detail::algebra_mul_avx2};
#endif

const KernelTable* select() {
  const char* env = std::getenv("SIMPLEST_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
  if (const KernelTable* t = avx2_kernels()) return t;
  return &kScalar;
}

const KernelTable*& current() {
  static const KernelTable* table = select();
  return table;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if SIMPLEST_HAVE_AVX2
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current(); }

void force(Isa isa) {
  if (isa == Isa::Avx2) {
    if (const KernelTable* t = avx2_kernels()) current() = t;
    return;
  }
  current() = &kScalar;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace simplest::kernels
