#include <cstdlib>
#include <cstring>

#include "msk/kernels.hpp"

namespace msk::kern {

const Ops* avx2_impl_table();
const Ops* neon_impl_table();

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_impl_table();
#endif
  return nullptr;
}

const Ops* neon_ops() { return neon_impl_table(); }

namespace {

const Ops* select() {
  if (const char* env = std::getenv("MSK_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
    if (std::strcmp(env, "avx2") == 0 && avx2_ops()) return avx2_ops();
    if (std::strcmp(env, "neon") == 0 && neon_ops()) return neon_ops();
  }
  if (const Ops* a = avx2_ops()) return a;
  if (const Ops* n = neon_ops()) return n;
  return &scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops* chosen = select();
  return *chosen;
}

}  // namespace msk::kern
