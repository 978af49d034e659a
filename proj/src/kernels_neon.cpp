// NEON variant. There is no u32 gather on NEON; for degrees up to 16 the
// whole image table fits a 64-byte vqtbl4 lookup on narrowed indices, which
// covers the signed-wreath search degrees (2n <= 16 up to B_8/D_8). Larger
// degrees fall back to the scalar loop.

#include "cxg/kernels.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)

#include <arm_neon.h>

namespace cxg::kernels {

void compose_neon(const Point* a, const Point* b, Point* out, std::size_t n) {
  if (n <= 16) {
    uint8_t tbl[16], idx[16], res[16];
    for (std::size_t i = 0; i < n; ++i) tbl[i] = static_cast<uint8_t>(b[i]);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<uint8_t>(a[i]);
    for (std::size_t i = n; i < 16; ++i) tbl[i] = idx[i] = 0;
    uint8x16_t v = vqtbl1q_u8(vld1q_u8(tbl), vld1q_u8(idx));
    vst1q_u8(res, v);
    for (std::size_t i = 0; i < n; ++i) out[i] = res[i];
    return;
  }
  compose_scalar(a, b, out, n);
}

}  // namespace cxg::kernels

#endif  // __ARM_NEON
