#pragma once

#include "varrest/kernels.hpp"

namespace varrest::kernels {

#if defined(__x86_64__) || defined(_M_X64)
// Defined in kernels_avx2.cpp; returns nullptr when the CPU lacks AVX2/FMA.
const Ops* avx2_ops();
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
// Defined in kernels_neon.cpp; NEON is baseline on AArch64.
const Ops* neon_ops();
#endif

}  // namespace varrest::kernels
