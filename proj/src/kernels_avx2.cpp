#include "kernels_backends.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 variants. One __m256d holds two interleaved complex doubles; the
// re/im split is done with movedup/permute and a final addsub, so each
// fused multiply touches both components of two lanes at once.

namespace varrest::kernels {
namespace {

inline cd reduce_pair(__m256d acc1, __m256d acc2) {
  // lane0/2: sum of ar*br, lane1/3: sum of ai*br; acc2 holds ai*bi / ar*bi.
  const __m256d v = _mm256_addsub_pd(acc1, acc2);
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);  // [re, im]
  alignas(16) double buf[2];
  _mm_store_pd(buf, s);
  return {buf[0], buf[1]};
}

cd cdotu_avx2(const cd* a, const cd* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc1a = _mm256_setzero_pd(), acc2a = _mm256_setzero_pd();
  __m256d acc1b = _mm256_setzero_pd(), acc2b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
    acc1a = _mm256_fmadd_pd(va0, _mm256_movedup_pd(vb0), acc1a);
    acc2a = _mm256_fmadd_pd(_mm256_permute_pd(va0, 0x5), _mm256_permute_pd(vb0, 0xF), acc2a);
    acc1b = _mm256_fmadd_pd(va1, _mm256_movedup_pd(vb1), acc1b);
    acc2b = _mm256_fmadd_pd(_mm256_permute_pd(va1, 0x5), _mm256_permute_pd(vb1, 0xF), acc2b);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc1a = _mm256_fmadd_pd(va, _mm256_movedup_pd(vb), acc1a);
    acc2a = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), _mm256_permute_pd(vb, 0xF), acc2a);
  }
  cd sum = reduce_pair(_mm256_add_pd(acc1a, acc1b), _mm256_add_pd(acc2a, acc2b));
  if (i < n) {
    const double ar = pa[2 * i], ai = pa[2 * i + 1];
    const double br = pb[2 * i], bi = pb[2 * i + 1];
    sum += cd{ar * br - ai * bi, ar * bi + ai * br};
  }
  return sum;
}

void cgemv_avx2(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = cdotu_avx2(a + r * cols, x, cols);
}

void cscale_avx2(const cd* a, const double* w, cd* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d ww = _mm256_permute4x64_pd(
        _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);  // [w0 w0 w1 w1]
    _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(va, ww));
  }
  if (i < n) {
    po[2 * i] = pa[2 * i] * w[i];
    po[2 * i + 1] = pa[2 * i + 1] * w[i];
  }
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
  static const Ops ops{"avx2", cdotu_avx2, cgemv_avx2, cscale_avx2};
  return &ops;
}

}  // namespace varrest::kernels

#endif  // x86_64
