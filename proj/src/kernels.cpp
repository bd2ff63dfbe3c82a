#include "pdc/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace pdc::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, "scalar", &detail::dot_scalar,
                                   &detail::weighted_dot_scalar,
                                   &detail::axpy_scalar};

#if defined(PDC_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::kAvx2, "avx2", &detail::dot_avx2,
                                 &detail::weighted_dot_avx2,
                                 &detail::axpy_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() {
  const char* forced = std::getenv("PDC_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalarTable;
  }
  if (const KernelTable* table = avx2_table()) return *table;
  return kScalarTable;
}

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

const KernelTable* avx2_table() {
#if defined(PDC_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return avx2_table() != nullptr;
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace pdc::kernels
