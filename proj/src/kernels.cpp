#include "kvcert/kernels.hpp"

#include <atomic>
#include <cmath>

namespace kvcert::kernels {

namespace {

void axpy_scalar(cplx *dst, const cplx *src, cplx a, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = src[i].real(), y = src[i].imag();
    dst[i] += cplx(x * ar - y * ai, y * ar + x * ai);
  }
}

void scale_scalar(cplx *dst, cplx a, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = dst[i].real(), y = dst[i].imag();
    dst[i] = cplx(x * ar - y * ai, y * ar + x * ai);
  }
}

double abs_sum_scalar(const cplx *p, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += std::hypot(p[i].real(), p[i].imag());
  return s;
}

const Ops kScalar{"scalar", axpy_scalar, scale_scalar, abs_sum_scalar};

std::atomic<const Ops *> g_active{nullptr};

const Ops *pick_auto() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2"))
    if (const Ops *t = avx2_ops())
      return t;
#endif
  return &kScalar;
}

} // namespace

const Ops &scalar_ops() { return kScalar; }

const Ops &active() {
  const Ops *t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = pick_auto();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

bool select(std::string_view name) {
  if (name == "auto") {
    g_active.store(pick_auto(), std::memory_order_release);
    return true;
  }
  if (name == "scalar") {
    g_active.store(&kScalar, std::memory_order_release);
    return true;
  }
  if (name == "avx2") {
    if (const Ops *t = avx2_ops()) {
      g_active.store(t, std::memory_order_release);
      return true;
    }
    return false;
  }
  return false;
}

} // namespace kvcert::kernels
