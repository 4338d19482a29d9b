#include <cstdlib>
#include <cstring>

#include "coverr/kern/kernels.hpp"

namespace coverr::kern {

namespace {

const Kernels& pick() {
  const char* env = std::getenv("COVERR_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (std::strcmp(env, "avx2") == 0) {
      const Kernels* k = avx2_kernels();
      if (k != nullptr) return *k;
      // Requested AVX2 on a CPU without it: fall through to scalar.
      return scalar_kernels();
    }
  }
  const Kernels* k = avx2_kernels();
  return k != nullptr ? *k : scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& chosen = pick();
  return chosen;
}

}  // namespace coverr::kern
