#include <cstdlib>
#include <string_view>

#include "wignerlab/simd/kernels.hpp"

namespace wignerlab::simd {

const KernelTable* avx2_table_unchecked() noexcept;

namespace {

bool cpu_has_avx2_fma() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  const KernelTable* avx2 = avx2_kernels();
  if (const char* env = std::getenv("WIGNERLAB_SIMD")) {
    if (std::string_view(env) == "scalar") return scalar_kernels();
  }
  return avx2 != nullptr ? *avx2 : scalar_kernels();
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable* table = cpu_has_avx2_fma() ? avx2_table_unchecked() : nullptr;
  return table;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace wignerlab::simd
