#include "varrest/variation.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace varrest;

namespace {

SampledCurve make_curve(std::vector<cd> values) {
  SampledCurve c;
  for (std::size_t i = 0; i < values.size(); ++i) c.params.push_back(double(i + 1));
  c.values = std::move(values);
  return c;
}

const std::vector<cd> kValueSet = {cd(0, 0),  cd(1, 0), cd(-1, 0),
                                   cd(0, 1),  cd(0, -1), cd(1, 1)};

SampledCurve random_set_curve(Rng& rng, std::size_t len) {
  std::vector<cd> v(len);
  for (auto& z : v) z = kValueSet[rng.next() % kValueSet.size()];
  return make_curve(std::move(v));
}

SampledCurve random_complex_curve(Rng& rng, std::size_t len) {
  std::vector<cd> v(len);
  for (auto& z : v) z = cd(rng.uniform(-2, 2), rng.uniform(-2, 2));
  return make_curve(std::move(v));
}

}  // namespace

TEST_CASE("var_seminorm: constant curve vanishes") {
  auto c = make_curve({cd(5, 0), cd(5, 0), cd(5, 0)});
  auto r = var_seminorm(c, 2.0);
  CHECK(r.value == 0.0);
  CHECK(r.witness == std::vector<std::size_t>{0});
}

TEST_CASE("var_seminorm: rho=1 equals total variation of 0,1,0,1") {
  auto c = make_curve({cd(0, 0), cd(1, 0), cd(0, 0), cd(1, 0)});
  auto r = var_seminorm(c, 1.0);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(curve_objective(c, r.witness, 1.0, false) == doctest::Approx(r.value));
}

TEST_CASE("var_seminorm: 0,1,0,1 at rho=2 equals sqrt(3)") {
  auto c = make_curve({cd(0, 0), cd(1, 0), cd(0, 0), cd(1, 0)});
  // frozen from the exhaustive oracle over all 2^4 index subsets
  CHECK(var_oracle_exhaustive(c, 2.0, false) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  auto r = var_seminorm(c, 2.0);
  CHECK(r.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.witness == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("var_norm: single sample reduces to modulus") {
  SampledCurve c{{1.0}, {cd(3, 4)}};
  for (double rho : {1.0, 2.0, 3.5, 100.0}) CHECK(var_norm(c, rho).value == 5.0);
}

TEST_CASE("var_norm: [1,0] at rho=2 equals sqrt(2)") {
  auto c = make_curve({cd(1, 0), cd(0, 0)});
  // frozen from the exhaustive oracle over the 3 nonempty subsets
  CHECK(var_oracle_exhaustive(c, 2.0, true) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(var_norm(c, 2.0).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("var_norm: constant curve gives |c|") {
  auto c = make_curve({cd(-2, 1), cd(-2, 1), cd(-2, 1), cd(-2, 1)});
  auto r = var_norm(c, 3.0);
  CHECK(r.value == std::abs(cd(-2, 1)));
  CHECK(r.witness == std::vector<std::size_t>{0});
}

TEST_CASE("oracle: rho=1 seminorm is the sum of consecutive differences") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    auto c = random_complex_curve(rng, 2 + rng.next() % 9);
    double direct = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) direct += std::abs(c.values[i] - c.values[i - 1]);
    CHECK(var_oracle_exhaustive(c, 1.0, false) == direct);
    CHECK(var_seminorm(c, 1.0).value == direct);
  }
}

TEST_CASE("DP matches exhaustive oracle on the small value set") {
  Rng rng(7);
  for (int t = 0; t < 400; ++t) {
    auto c = random_set_curve(rng, 1 + rng.next() % 10);
    for (double rho : {1.0, 1.5, 2.0, 3.0}) {
      const double semi = var_seminorm(c, rho).value;
      const double norm = var_norm(c, rho).value;
      CHECK(semi == doctest::Approx(var_oracle_exhaustive(c, rho, false)).epsilon(1e-12));
      CHECK(norm == doctest::Approx(var_oracle_exhaustive(c, rho, true)).epsilon(1e-12));
    }
  }
}

TEST_CASE("DP matches exhaustive oracle on random complex curves") {
  Rng rng(11);
  for (int t = 0; t < 120; ++t) {
    auto c = random_complex_curve(rng, 2 + rng.next() % 11);
    for (double rho : {1.0, 2.0, 2.7, 5.0, 80.0}) {
      CHECK(var_seminorm(c, rho).value ==
            doctest::Approx(var_oracle_exhaustive(c, rho, false)).epsilon(1e-12));
      CHECK(var_norm(c, rho).value ==
            doctest::Approx(var_oracle_exhaustive(c, rho, true)).epsilon(1e-12));
    }
  }
}

TEST_CASE("norm dominates seminorm and sup") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    auto c = random_complex_curve(rng, 1 + rng.next() % 12);
    const double rho = rng.uniform(1.0, 6.0);
    const double semi = var_seminorm(c, rho).value;
    const double norm = var_norm(c, rho).value;
    double sup = 0.0;
    for (auto& z : c.values) sup = std::max(sup, std::abs(z));
    CHECK(norm >= semi);
    CHECK(norm >= sup);
  }
}

TEST_CASE("seminorm is nonincreasing in rho") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto c = random_complex_curve(rng, 2 + rng.next() % 10);
    double prev = var_seminorm(c, 1.0).value;
    for (double rho : {1.5, 2.0, 3.0, 6.0, 20.0}) {
      const double cur = var_seminorm(c, rho).value;
      CHECK(cur <= prev * (1.0 + 1e-12) + 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("homogeneity under complex scaling") {
  Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    auto c = random_complex_curve(rng, 2 + rng.next() % 8);
    const cd scale(rng.uniform(-3, 3), rng.uniform(-3, 3));
    auto scaled = c;
    for (auto& z : scaled.values) z *= scale;
    const double rho = rng.uniform(1.0, 5.0);
    CHECK(var_seminorm(scaled, rho).value ==
          doctest::Approx(std::abs(scale) * var_seminorm(c, rho).value).epsilon(1e-12));
    CHECK(var_norm(scaled, rho).value ==
          doctest::Approx(std::abs(scale) * var_norm(c, rho).value).epsilon(1e-12));
  }
}

TEST_CASE("refinement never decreases the variation") {
  Rng rng(23);
  for (int t = 0; t < 80; ++t) {
    auto c = random_complex_curve(rng, 2 + rng.next() % 8);
    const double rho = rng.uniform(1.0, 4.0);
    const double semi = var_seminorm(c, rho).value;
    const double norm = var_norm(c, rho).value;
    // insert a fresh sample in the middle
    auto refined = c;
    const std::size_t pos = 1 + rng.next() % (c.size() - 1);
    refined.params.insert(refined.params.begin() + pos,
                          0.5 * (c.params[pos - 1] + c.params[pos]));
    refined.values.insert(refined.values.begin() + pos, cd(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    CHECK(var_seminorm(refined, rho).value >= semi * (1.0 - 1e-14));
    CHECK(var_norm(refined, rho).value >= norm * (1.0 - 1e-14));
  }
}

TEST_CASE("witness reproduces the value") {
  Rng rng(29);
  for (int t = 0; t < 120; ++t) {
    auto c = random_complex_curve(rng, 1 + rng.next() % 10);
    for (double rho : {1.0, 2.0, 3.3, rho_infinity}) {
      auto rs = var_seminorm(c, rho);
      auto rn = var_norm(c, rho);
      CHECK(curve_objective(c, rs.witness, rho, false) ==
            doctest::Approx(rs.value).epsilon(1e-12));
      CHECK(curve_objective(c, rn.witness, rho, true) ==
            doctest::Approx(rn.value).epsilon(1e-12));
      for (std::size_t i = 1; i < rs.witness.size(); ++i) CHECK(rs.witness[i - 1] < rs.witness[i]);
    }
  }
}

TEST_CASE("ties resolve to the lexicographically smallest witness") {
  auto c = make_curve({cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0)});
  // three maximizers of the rho=2 seminorm: {0,1,3}, {0,2,3}, {0,1,2,3}
  auto r = var_seminorm(c, 2.0);
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.witness == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("maximal mode (rho = infinity)") {
  auto c = make_curve({cd(0, 0), cd(1, 0), cd(0, 0), cd(1, 0)});
  auto rs = var_seminorm(c, rho_infinity);
  CHECK(rs.value == 1.0);
  CHECK(rs.witness == std::vector<std::size_t>{0, 1});
  auto rn = var_norm(c, rho_infinity);
  CHECK(rn.value == 1.0);
  CHECK(rn.witness == std::vector<std::size_t>{0, 1});
  // maximal mode dominates every finite-rho... no: it is the monotone limit,
  // so it lower-bounds the rho-seminorms
  CHECK(rs.value <= var_seminorm(c, 8.0).value + 1e-15);
}

TEST_CASE("large rho goes through the log-space path") {
  auto c = make_curve({cd(0, 0), cd(2, 0), cd(0, 0), cd(2, 0)});
  const double rho = 100.0;
  // 2 * 3^(1/100), also confirmed by the oracle
  const double expect = 2.0 * std::pow(3.0, 0.01);
  CHECK(var_seminorm(c, rho).value == doctest::Approx(expect).epsilon(1e-13));
  CHECK(var_oracle_exhaustive(c, rho, false) == doctest::Approx(expect).epsilon(1e-13));
  // values large enough that unscaled |d|^rho would overflow
  auto big = make_curve({cd(0, 0), cd(1e4, 0), cd(0, 0)});
  CHECK(std::isfinite(var_seminorm(big, 200.0).value));
  CHECK(var_seminorm(big, 200.0).value ==
        doctest::Approx(1e4 * std::pow(2.0, 1.0 / 200.0)).epsilon(1e-12));
}

TEST_CASE("domain errors") {
  auto c = make_curve({cd(0, 0), cd(1, 0)});
  CHECK_THROWS_AS(var_seminorm(c, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(var_norm(SampledCurve{}, 2.0), std::invalid_argument);
  SampledCurve bad{{2.0, 1.0}, {cd(0, 0), cd(1, 0)}};
  CHECK_THROWS_AS(var_seminorm(bad, 2.0), std::invalid_argument);
  SampledCurve neg{{-1.0, 1.0}, {cd(0, 0), cd(1, 0)}};
  CHECK_THROWS_AS(var_seminorm(neg, 2.0), std::invalid_argument);
  auto too_long = make_curve(std::vector<cd>(21, cd(1, 0)));
  CHECK_THROWS_AS(var_oracle_exhaustive(too_long, 2.0, false), std::invalid_argument);
}

// ---- biparameter ----

namespace {

SampledSurface make_surface(std::vector<std::vector<cd>> vals) {
  SampledSurface s;
  for (std::size_t i = 0; i < vals.size(); ++i) s.eps_params.push_back(double(i + 1));
  for (std::size_t j = 0; j < vals[0].size(); ++j) s.eta_params.push_back(double(j + 1));
  s.values = std::move(vals);
  return s;
}

}  // namespace

TEST_CASE("bivar: additive surfaces vanish") {
  Rng rng(31);
  std::vector<double> u(4), v(5);
  for (auto& x : u) x = rng.uniform(-2, 2);
  for (auto& x : v) x = rng.uniform(-2, 2);
  std::vector<std::vector<cd>> vals(4, std::vector<cd>(5));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) vals[i][j] = cd(u[i] + v[j], u[i] - v[j]);
  auto s = make_surface(std::move(vals));
  CHECK(bivar_seminorm(s, 2.0).value == 0.0);
}

TEST_CASE("bivar: single rectangle") {
  auto s = make_surface({{cd(0, 0), cd(0, 0)}, {cd(0, 0), cd(1, 0)}});
  auto r = bivar_seminorm(s, 2.0);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.eps_witness == std::vector<std::size_t>{0, 1});
  CHECK(r.eta_witness == std::vector<std::size_t>{0, 1});
}

TEST_CASE("bivar: tensor product factorizes") {
  const std::vector<cd> u = {cd(0, 0), cd(1, 0), cd(0, 0)};
  const std::vector<cd> v = u;
  std::vector<std::vector<cd>> vals(3, std::vector<cd>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) vals[i][j] = u[i] * v[j];
  auto s = make_surface(std::move(vals));
  // var_seminorm(u,2) = sqrt(2), so the product is 2 (also the brute-force value)
  CHECK(oracles::bivar_bruteforce(s, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bivar_seminorm(s, 2.0).value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("bivar: tensor factorization property on random curves") {
  Rng rng(37);
  for (int t = 0; t < 30; ++t) {
    const std::size_t nu = 2 + rng.next() % 3, nv = 2 + rng.next() % 3;
    std::vector<cd> u(nu), v(nv);
    for (auto& z : u) z = cd(rng.uniform(-2, 2), rng.uniform(-2, 2));
    for (auto& z : v) z = cd(rng.uniform(-2, 2), rng.uniform(-2, 2));
    std::vector<std::vector<cd>> vals(nu, std::vector<cd>(nv));
    for (std::size_t i = 0; i < nu; ++i)
      for (std::size_t j = 0; j < nv; ++j) vals[i][j] = u[i] * v[j];
    auto s = make_surface(std::move(vals));
    const double rho = rng.uniform(1.0, 4.0);
    const double su = var_seminorm(make_curve(u), rho).value;
    const double sv = var_seminorm(make_curve(v), rho).value;
    CHECK(bivar_seminorm(s, rho).value == doctest::Approx(su * sv).epsilon(1e-11));
  }
}

TEST_CASE("bivar exact agrees with the brute-force oracle") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t nr = 2 + rng.next() % 4, nc = 2 + rng.next() % 4;
    std::vector<std::vector<cd>> vals(nr, std::vector<cd>(nc));
    for (auto& row : vals)
      for (auto& z : row) z = cd(rng.uniform(-2, 2), rng.uniform(-2, 2));
    auto s = make_surface(std::move(vals));
    for (double rho : {1.0, 2.0, 3.4}) {
      auto r = bivar_seminorm(s, rho);
      CHECK(r.value == doctest::Approx(oracles::bivar_bruteforce(s, rho)).epsilon(1e-12));
      CHECK(surface_objective(s, r.eps_witness, r.eta_witness, rho) ==
            doctest::Approx(r.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("bivar: greedy is a lower bound for exact") {
  Rng rng(43);
  for (int t = 0; t < 25; ++t) {
    const std::size_t nr = 2 + rng.next() % 5, nc = 2 + rng.next() % 5;
    std::vector<std::vector<cd>> vals(nr, std::vector<cd>(nc));
    for (auto& row : vals)
      for (auto& z : row) z = cd(rng.uniform(-2, 2), rng.uniform(-2, 2));
    auto s = make_surface(std::move(vals));
    const double rho = rng.uniform(1.0, 4.0);
    auto greedy = bivar_seminorm(s, rho, BivarMode::greedy);
    auto exact = bivar_seminorm(s, rho, BivarMode::exact);
    CHECK(greedy.value <= exact.value * (1.0 + 1e-12));
    CHECK(surface_objective(s, greedy.eps_witness, greedy.eta_witness, rho) ==
          doctest::Approx(greedy.value).epsilon(1e-12));
  }
}

TEST_CASE("bivar: degenerate shapes and the exact-mode cap") {
  auto row = make_surface({{cd(0, 0), cd(3, 0), cd(1, 0)}});
  CHECK(bivar_seminorm(row, 2.0).value == 0.0);
  std::vector<std::vector<cd>> vals(13, std::vector<cd>(13, cd(1, 0)));
  auto s = make_surface(std::move(vals));
  CHECK_THROWS_AS(bivar_seminorm(s, 2.0, BivarMode::exact), std::domain_error);
  CHECK(bivar_seminorm(s, 2.0, BivarMode::greedy).value == 0.0);  // constant surface
}

TEST_CASE("bivar: transposed enumeration path (wide surface over the cap half)") {
  // 3x14 surface: exact mode must enumerate the 3-row axis
  Rng rng(47);
  std::vector<std::vector<cd>> vals(3, std::vector<cd>(14));
  for (auto& row : vals)
    for (auto& z : row) z = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  auto s = make_surface(std::move(vals));
  auto r = bivar_seminorm(s, 2.5, BivarMode::exact, 64);
  SampledSurface st;
  st.eps_params = s.eta_params;
  st.eta_params = s.eps_params;
  st.values.assign(14, std::vector<cd>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 14; ++j) st.values[j][i] = s.values[i][j];
  auto rt = bivar_seminorm(st, 2.5, BivarMode::exact, 64);
  CHECK(r.value == doctest::Approx(rt.value).epsilon(1e-13));
  CHECK(r.eps_witness == rt.eta_witness);
  CHECK(r.eta_witness == rt.eps_witness);
}
