#include "varrest/kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "varrest/core.hpp"

using namespace varrest;
namespace k = varrest::kernels;

namespace {

std::vector<cd> random_cvec(Rng& rng, std::size_t n) {
  std::vector<cd> v(n);
  for (auto& z : v) z = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return v;
}

}  // namespace

TEST_CASE("scalar kernels compute what they claim") {
  Rng rng(101);
  auto a = random_cvec(rng, 7);
  auto b = random_cvec(rng, 7);
  cd expect = 0.0;
  for (int i = 0; i < 7; ++i) expect += a[i] * b[i];
  const cd got = k::scalar_ops().cdotu(a.data(), b.data(), 7);
  CHECK(std::abs(got - expect) <= 1e-14);

  std::vector<double> w(7);
  for (auto& x : w) x = rng.uniform(-2, 2);
  std::vector<cd> out(7);
  k::scalar_ops().cscale(a.data(), w.data(), out.data(), 7);
  for (int i = 0; i < 7; ++i) CHECK(out[i] == a[i] * w[i]);
}

TEST_CASE("every available backend matches the scalar reference") {
  Rng rng(103);
  const auto backends = k::available_backends();
  REQUIRE(!backends.empty());
  CHECK(std::string(backends.front()->name) == "scalar");
  // edge sizes around the vector width, plus a large one
  for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(2), std::size_t(3),
                        std::size_t(4), std::size_t(5), std::size_t(8), std::size_t(13),
                        std::size_t(1024), std::size_t(1031)}) {
    auto a = random_cvec(rng, n);
    auto b = random_cvec(rng, n);
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(-3, 3);
    const cd ref = k::scalar_ops().cdotu(a.data(), b.data(), n);
    std::vector<cd> ref_scale(n);
    k::scalar_ops().cscale(a.data(), w.data(), ref_scale.data(), n);
    for (const auto* ops : backends) {
      const cd got = ops->cdotu(a.data(), b.data(), n);
      CHECK(std::abs(got - ref) <= 1e-13 * (1.0 + std::abs(ref)) * double(n ? n : 1));
      std::vector<cd> got_scale(n);
      ops->cscale(a.data(), w.data(), got_scale.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(got_scale[i] == ref_scale[i]);
    }
  }
}

TEST_CASE("cgemv matches per-row dot products on every backend") {
  Rng rng(107);
  const std::size_t rows = 9, cols = 37;
  auto mat = random_cvec(rng, rows * cols);
  auto x = random_cvec(rng, cols);
  std::vector<cd> ref(rows);
  k::scalar_ops().cgemv(mat.data(), rows, cols, x.data(), ref.data());
  for (std::size_t r = 0; r < rows; ++r) {
    const cd d = k::scalar_ops().cdotu(mat.data() + r * cols, x.data(), cols);
    CHECK(std::abs(ref[r] - d) == 0.0);
  }
  for (const auto* ops : k::available_backends()) {
    std::vector<cd> got(rows);
    ops->cgemv(mat.data(), rows, cols, x.data(), got.data());
    for (std::size_t r = 0; r < rows; ++r)
      CHECK(std::abs(got[r] - ref[r]) <= 1e-13 * (1.0 + std::abs(ref[r])) * double(cols));
  }
}

TEST_CASE("backend selection") {
  const auto* before = &k::active();
  CHECK(k::set_active("scalar"));
  CHECK(std::string(k::active().name) == "scalar");
  CHECK_FALSE(k::set_active("no-such-backend"));
  CHECK(std::string(k::active().name) == "scalar");
  CHECK(k::set_active("auto"));
  CHECK(&k::active() == before);
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) {
    CHECK(k::set_active("avx2"));
    CHECK(std::string(k::active().name) == "avx2");
    CHECK(k::set_active("auto"));
  }
#endif
}
