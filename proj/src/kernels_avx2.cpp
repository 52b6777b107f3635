// AVX2 variants of the complex array kernels. Compiled with -mavx2 but only
// dispatched to after a runtime cpuid check (see kernels.cpp).
//
// axpy/scale round exactly like the scalar kernels (mul + addsub, no FMA),
// so those two are bit-identical to the scalar path. abs_sum uses lane
// accumulators and may differ from the scalar sum in the last ulps.
#include "kvcert/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <cmath>
#include <immintrin.h>

namespace kvcert::kernels {
namespace {

// (x+iy)*(ar+i*ai) for two packed complex doubles per register
inline __m256d cmul(__m256d v, __m256d ar, __m256d ai) {
  __m256d t1 = _mm256_mul_pd(v, ar);
  __m256d vs = _mm256_permute_pd(v, 0b0101); // (y0,x0,y1,x1)
  __m256d t2 = _mm256_mul_pd(vs, ai);
  return _mm256_addsub_pd(t1, t2); // (x*ar - y*ai, y*ar + x*ai)
}

void axpy_avx2(cplx *dst, const cplx *src, cplx a, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  double *d = reinterpret_cast<double *>(dst);
  const double *s = reinterpret_cast<const double *>(src);
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(s + 2 * i);
    __m256d acc = _mm256_loadu_pd(d + 2 * i);
    acc = _mm256_add_pd(acc, cmul(v, ar, ai));
    _mm256_storeu_pd(d + 2 * i, acc);
  }
  for (; i < n; ++i) {
    const double x = src[i].real(), y = src[i].imag();
    dst[i] += cplx(x * a.real() - y * a.imag(), y * a.real() + x * a.imag());
  }
}

void scale_avx2(cplx *dst, cplx a, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  double *d = reinterpret_cast<double *>(dst);
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(d + 2 * i);
    _mm256_storeu_pd(d + 2 * i, cmul(v, ar, ai));
  }
  for (; i < n; ++i) {
    const double x = dst[i].real(), y = dst[i].imag();
    dst[i] = cplx(x * a.real() - y * a.imag(), y * a.real() + x * a.imag());
  }
}

double abs_sum_avx2(const cplx *p, std::size_t n) {
  const double *s = reinterpret_cast<const double *>(p);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(s + 2 * i);
    __m256d sq = _mm256_mul_pd(v, v);
    __m256d h = _mm256_hadd_pd(sq, sq); // lanes 0,2 hold |z|^2
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(h));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[2];
  for (; i < n; ++i)
    total += std::hypot(p[i].real(), p[i].imag());
  return total;
}

const Ops kAvx2{"avx2", axpy_avx2, scale_avx2, abs_sum_avx2};

} // namespace

const Ops *avx2_ops() { return &kAvx2; }

} // namespace kvcert::kernels

#else

namespace kvcert::kernels {
const Ops *avx2_ops() { return nullptr; }
} // namespace kvcert::kernels

#endif
