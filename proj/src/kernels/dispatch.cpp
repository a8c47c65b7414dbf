#include <cstdlib>
#include <string_view>

#include "graphlab/kernels.hpp"
#include "kernels_internal.hpp"

namespace graphlab::kernels {

const KernelTable* avx2() {
#if defined(GRAPHLAB_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("GRAPHLAB_KERNELS");
    const std::string_view request = env != nullptr ? env : "auto";
    if (request == "scalar") {
      return scalar();
    }
    if (const KernelTable* wide = avx2(); wide != nullptr) {
      return *wide;
    }
    return scalar();
  }();
  return chosen;
}

}  // namespace graphlab::kernels
