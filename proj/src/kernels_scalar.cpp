#include "varrest/kernels.hpp"

// Reference kernels. Complex arithmetic is written out on doubles so the
// compiler does not route through __muldc3 in the hot loops.

namespace varrest::kernels {
namespace {

cd cdotu_scalar(const cd* a, const cd* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = pa[2 * i], ai = pa[2 * i + 1];
    const double br = pb[2 * i], bi = pb[2 * i + 1];
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

void cgemv_scalar(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = cdotu_scalar(a + r * cols, x, cols);
}

void cscale_scalar(const cd* a, const double* w, cd* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  double* po = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    po[2 * i] = pa[2 * i] * w[i];
    po[2 * i + 1] = pa[2 * i + 1] * w[i];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", cdotu_scalar, cgemv_scalar, cscale_scalar};
  return ops;
}

}  // namespace varrest::kernels
