#pragma once
#include <complex>
#include <cstddef>
#include <string_view>

namespace kvcert::kernels {

using cplx = std::complex<double>;

// dst[i] += a * src[i]
using AxpyFn = void (*)(cplx *dst, const cplx *src, cplx a, std::size_t n);
// dst[i] *= a
using ScaleFn = void (*)(cplx *dst, cplx a, std::size_t n);
// sum_i |p[i]|
using AbsSumFn = double (*)(const cplx *p, std::size_t n);

struct Ops {
  const char *name;
  AxpyFn axpy;
  ScaleFn scale;
  AbsSumFn abs_sum;
};

/// Currently active kernel table (picked from CPU features at first use).
const Ops &active();

/// Force an implementation: "auto", "scalar" or "avx2".
/// Returns false (and leaves the selection unchanged) if unavailable.
bool select(std::string_view name);

const Ops &scalar_ops();
const Ops *avx2_ops(); // nullptr when unsupported on this CPU/build

} // namespace kvcert::kernels
