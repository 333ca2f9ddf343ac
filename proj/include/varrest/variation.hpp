#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "varrest/core.hpp"

namespace varrest {

// Finitely sampled curve eps -> a(eps). Params are strictly increasing
// positive reals, one complex value per param.
struct SampledCurve {
  std::vector<double> params;
  std::vector<cd> values;

  std::size_t size() const { return params.size(); }
  void validate() const;  // throws std::invalid_argument on a broken invariant
};

// Finitely sampled two-parameter surface b(eps, eta); values[i][j] is the
// sample at (eps_params[i], eta_params[j]).
struct SampledSurface {
  std::vector<double> eps_params;
  std::vector<double> eta_params;
  std::vector<std::vector<cd>> values;

  std::size_t rows() const { return eps_params.size(); }
  std::size_t cols() const { return eta_params.size(); }
  void validate() const;
};

struct VariationResult {
  double value = 0.0;
  std::vector<std::size_t> witness;  // strictly increasing indices attaining value
};

struct SurfaceVariationResult {
  double value = 0.0;
  std::vector<std::size_t> eps_witness;
  std::vector<std::size_t> eta_witness;
};

// Passing rho_infinity selects the maximal mode: largest single increment
// (seminorm) resp. its max with the sup of |a| (norm), instead of a limit
// of the |.|^rho sums.
inline constexpr double rho_infinity = std::numeric_limits<double>::infinity();

// sup over subsequences of the sampled params of (sum_j |a_j - a_{j-1}|^rho)^{1/rho}.
// O(n^2) dynamic program over the last chosen index; ties between maximizing
// subsequences resolve to the lexicographically smallest index set.
VariationResult var_seminorm(const SampledCurve& curve, double rho);

// Same supremum with the leading |a(eps_0)|^rho term included. A single
// sample is an admissible subsequence, so the norm of a one-point curve is
// |a_0|. The result never falls below max_k |a_k|.
VariationResult var_norm(const SampledCurve& curve, double rho);

// Value-only fast paths (no validation, no witness); same DP.
double var_seminorm_value(std::span<const cd> values, double rho);
double var_norm_value(std::span<const cd> values, double rho);

enum class BivarMode { exact, greedy };

// Biparameter variation seminorm over rectangular second differences.
// Exact mode maximizes over all pairs of subsequences (subset enumeration
// over the smaller axis, DP over the other); requires rows*cols <= exact_cap.
// Greedy mode returns a certified lower bound: the all-indices value improved
// by local single-index toggles.
SurfaceVariationResult bivar_seminorm(const SampledSurface& surface, double rho,
                                      BivarMode mode = BivarMode::exact,
                                      std::size_t exact_cap = 144);

// Brute force over all 2^n - 1 nonempty index subsets; reference for the DP.
// Curves longer than 20 samples are rejected.
double var_oracle_exhaustive(const SampledCurve& curve, double rho, bool with_first_term);

// Objective recomputation on explicit index sets (witness checks).
double curve_objective(const SampledCurve& curve, std::span<const std::size_t> idx,
                       double rho, bool with_first_term);
double surface_objective(const SampledSurface& surface, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols, double rho);

namespace detail {

// |d|^rho for d >= 0. rho = 1 and 2 short-circuit so that those cases stay
// bit-exact; rho > 64 goes through exp/log to dodge pow's extreme-exponent
// paths.
inline double pow_rho(double d, double rho) {
  if (d <= 0.0) return 0.0;
  if (rho == 1.0) return d;
  if (rho == 2.0) return d * d;
  if (rho > 64.0) return std::exp(rho * std::log(d));
  return std::pow(d, rho);
}

}  // namespace detail

}  // namespace varrest
