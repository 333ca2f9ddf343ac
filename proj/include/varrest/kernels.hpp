#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace varrest::kernels {

using cd = std::complex<double>;

// Data-parallel inner loops behind the quadrature pipelines. Every operation
// has a scalar reference implementation; AVX2/NEON variants are selected at
// runtime and must agree with the reference to floating-point reassociation
// accuracy (equivalence-tested in tests/test_kernels.cpp).
struct Ops {
  const char* name;
  // sum_i a[i] * b[i], unconjugated
  cd (*cdotu)(const cd* a, const cd* b, std::size_t n);
  // out[r] = sum_c a[r*cols + c] * x[c], row-major
  void (*cgemv)(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* out);
  // out[i] = a[i] * w[i], complex times real
  void (*cscale)(const cd* a, const double* w, cd* out, std::size_t n);
};

const Ops& scalar_ops();

// Currently active backend; picked once at first use (best supported ISA).
const Ops& active();

// Force a backend by name ("scalar", "avx2", "neon", "auto").
// Returns false if the backend is unavailable on this machine.
bool set_active(std::string_view name);

// All backends usable on this machine, scalar first.
std::vector<const Ops*> available_backends();

}  // namespace varrest::kernels
