#include "cxg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace cxg::kernels {

void compose_scalar(const Point* a, const Point* b, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

namespace {

using ComposeFn = void (*)(const Point*, const Point*, Point*, std::size_t);

bool cpu_has_avx2() {
#if defined(CXG_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct Dispatch {
  ComposeFn fn = &compose_scalar;
  Impl impl = Impl::kScalar;
};

Dispatch pick(Impl requested) {
  switch (requested) {
    case Impl::kScalar:
      return {&compose_scalar, Impl::kScalar};
#if defined(CXG_HAVE_AVX2_KERNELS)
    case Impl::kAvx2:
      if (cpu_has_avx2()) return {&compose_avx2, Impl::kAvx2};
      break;
#endif
#if defined(__ARM_NEON) || defined(__ARM_NEON__)
    case Impl::kNeon:
      return {&compose_neon, Impl::kNeon};
#endif
    default:
      break;
  }
  throw std::invalid_argument(std::string("kernel variant unavailable: ") +
                              impl_name(requested));
}

Dispatch initial_dispatch() {
  if (const char* env = std::getenv("CXG_KERNEL")) {
    if (!std::strcmp(env, "scalar")) return pick(Impl::kScalar);
    if (!std::strcmp(env, "avx2")) return pick(Impl::kAvx2);
    if (!std::strcmp(env, "neon")) return pick(Impl::kNeon);
  }
#if defined(__ARM_NEON) || defined(__ARM_NEON__)
  return {&compose_neon, Impl::kNeon};
#endif
  if (cpu_has_avx2()) return pick(Impl::kAvx2);
  return {&compose_scalar, Impl::kScalar};
}

Dispatch& dispatch() {
  static Dispatch d = initial_dispatch();
  return d;
}

}  // namespace

void compose(const Point* a, const Point* b, Point* out, std::size_t n) {
  dispatch().fn(a, b, out, n);
}

Impl active() { return dispatch().impl; }

const char* impl_name(Impl impl) {
  switch (impl) {
    case Impl::kScalar: return "scalar";
    case Impl::kAvx2: return "avx2";
    case Impl::kNeon: return "neon";
  }
  return "?";
}

bool available(Impl impl) {
  switch (impl) {
    case Impl::kScalar:
      return true;
    case Impl::kAvx2:
      return cpu_has_avx2();
    case Impl::kNeon:
#if defined(__ARM_NEON) || defined(__ARM_NEON__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

void force(Impl impl) { dispatch() = pick(impl); }

}  // namespace cxg::kernels
