#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Low-level array kernels for the search inner loop.
//
// The exhaustive pair search spends nearly all of its time composing
// permutations (out[i] = b[a[i]], a gather) and scanning cycles of the
// result. The gather is data-parallel; we keep a scalar reference kernel
// and SIMD variants selected once at startup from CPU capabilities.
// Every variant must be bit-identical to the scalar reference; the test
// suite enforces this on randomized inputs for all compiled-in variants.

namespace cxg::kernels {

using Point = uint32_t;

enum class Impl {
  kScalar,
  kAvx2,
  kNeon,
};

// out[i] = b[a[i]] for i in [0, n). Dispatches to the active variant.
void compose(const Point* a, const Point* b, Point* out, std::size_t n);

// Reference implementation (always available).
void compose_scalar(const Point* a, const Point* b, Point* out, std::size_t n);

#if defined(CXG_HAVE_AVX2_KERNELS)
void compose_avx2(const Point* a, const Point* b, Point* out, std::size_t n);
#endif
#if defined(__ARM_NEON) || defined(__ARM_NEON__)
void compose_neon(const Point* a, const Point* b, Point* out, std::size_t n);
#endif

// Active variant. Chosen at startup: best supported by the CPU, unless the
// CXG_KERNEL environment variable ("scalar", "avx2", "neon") overrides it.
Impl active();
const char* impl_name(Impl impl);

// True if the variant can run on this machine/build.
bool available(Impl impl);

// Force a variant (tests). Throws std::invalid_argument if unavailable.
// Not thread-safe; call only while no searches are running.
void force(Impl impl);

}  // namespace cxg::kernels
