#include "kernels_backends.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

// NEON variants. A float64x2_t holds exactly one interleaved complex double;
// two independent accumulators per component hide FMA latency.

namespace varrest::kernels {
namespace {

cd cdotu_neon(const cd* a, const cd* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t re0 = vdupq_n_f64(0.0), im0 = vdupq_n_f64(0.0);
  float64x2_t re1 = vdupq_n_f64(0.0), im1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t va0 = vld1q_f64(pa + 2 * i);       // [ar ai]
    const float64x2_t vb0 = vld1q_f64(pb + 2 * i);       // [br bi]
    const float64x2_t va1 = vld1q_f64(pa + 2 * i + 2);
    const float64x2_t vb1 = vld1q_f64(pb + 2 * i + 2);
    // re pair accumulates [ar*br, ai*bi]; im pair accumulates [ar*bi, ai*br].
    re0 = vfmaq_f64(re0, va0, vb0);
    im0 = vfmaq_f64(im0, va0, vextq_f64(vb0, vb0, 1));
    re1 = vfmaq_f64(re1, va1, vb1);
    im1 = vfmaq_f64(im1, va1, vextq_f64(vb1, vb1, 1));
  }
  const float64x2_t re = vaddq_f64(re0, re1);
  const float64x2_t im = vaddq_f64(im0, im1);
  double sum_re = vgetq_lane_f64(re, 0) - vgetq_lane_f64(re, 1);
  double sum_im = vgetq_lane_f64(im, 0) + vgetq_lane_f64(im, 1);
  if (i < n) {
    const double ar = pa[2 * i], ai = pa[2 * i + 1];
    const double br = pb[2 * i], bi = pb[2 * i + 1];
    sum_re += ar * br - ai * bi;
    sum_im += ar * bi + ai * br;
  }
  return {sum_re, sum_im};
}

void cgemv_neon(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = cdotu_neon(a + r * cols, x, cols);
}

void cscale_neon(const cd* a, const double* w, cd* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  double* po = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t va = vld1q_f64(pa + 2 * i);
    vst1q_f64(po + 2 * i, vmulq_n_f64(va, w[i]));
  }
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops{"neon", cdotu_neon, cgemv_neon, cscale_neon};
  return &ops;
}

}  // namespace varrest::kernels

#endif  // aarch64
