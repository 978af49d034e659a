// AVX2 variant of the compose gather. Compiled with -mavx2 in its own
// translation unit; only reached through runtime dispatch after a cpuid
// check, so the rest of the library stays baseline-ISA.

#include "cxg/kernels.hpp"

#if defined(CXG_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace cxg::kernels {

void compose_avx2(const Point* a, const Point* b, Point* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i img = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), img);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

}  // namespace cxg::kernels

#endif  // CXG_HAVE_AVX2_KERNELS
