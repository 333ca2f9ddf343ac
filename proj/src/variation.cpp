#include "varrest/variation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace varrest {

namespace {

void check_rho(double rho) {
  if (std::isnan(rho) || rho < 1.0)
    throw std::invalid_argument("variation: rho must satisfy rho >= 1");
}

void check_params(const std::vector<double>& params, const char* what) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!std::isfinite(params[i]) || params[i] <= 0.0)
      throw std::invalid_argument(std::string(what) + ": params must be positive reals");
    if (i > 0 && !(params[i - 1] < params[i]))
      throw std::invalid_argument(std::string(what) + ": params must be strictly increasing");
  }
}

void check_values(std::span<const cd> values, const char* what) {
  for (const cd& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument(std::string(what) + ": values must be finite");
}

// Scale factor for the rho > 64 log-space regime; 1.0 otherwise. Increments
// (and, in norm mode, value moduli) are divided by it before |.|^rho so the
// partial sums cannot overflow.
double dp_scale(std::span<const cd> a, double rho, bool with_first) {
  if (rho <= 64.0) return 1.0;
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (with_first) m = std::max(m, std::abs(a[k]));
    for (std::size_t j = 0; j < k; ++j) m = std::max(m, std::abs(a[k] - a[j]));
  }
  return m > 0.0 ? m : 1.0;
}

double sup_abs(std::span<const cd> a) {
  double m = 0.0;
  for (const cd& v : a) m = std::max(m, std::abs(v));
  return m;
}

std::vector<std::size_t> chain_of(const std::vector<std::ptrdiff_t>& pred, std::size_t k) {
  std::vector<std::size_t> chain;
  std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(k);
  while (cur >= 0) {
    chain.push_back(static_cast<std::size_t>(cur));
    cur = pred[static_cast<std::size_t>(cur)];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- maximal mode (rho = infinity) ----

VariationResult var_inf(std::span<const cd> a, bool with_first) {
  const std::size_t n = a.size();
  VariationResult best;
  auto offer = [&best](double v, std::vector<std::size_t> w) {
    if (v > best.value || (v == best.value && lex_less(w, best.witness)))
      best = {v, std::move(w)};
  };
  best.value = with_first ? std::abs(a[0]) : 0.0;
  best.witness = {0};
  if (with_first)
    for (std::size_t k = 1; k < n; ++k) offer(std::abs(a[k]), {k});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(a[j] - a[i]);
      const double v = with_first ? std::max(d, std::abs(a[i])) : d;
      offer(v, {i, j});
    }
  }
  return best;
}

// ---- finite rho dynamic program ----

struct DpResult {
  double scaled_sum;  // max of the scaled power sums
  std::size_t arg;    // index attaining it
};

// f(k) = best scaled power sum over subsequences ending at k. On exact value
// ties the lexicographically smallest chain is kept, which propagates to the
// lexicographically smallest global witness.
DpResult variation_dp(std::span<const cd> a, double rho, bool with_first, double scale,
                      std::vector<std::ptrdiff_t>* pred_out) {
  const std::size_t n = a.size();
  std::vector<double> f(n);
  std::vector<std::ptrdiff_t> pred(n, -1);
  const bool track = pred_out != nullptr;
  const double inv = 1.0 / scale;
  for (std::size_t k = 0; k < n; ++k) {
    double best = with_first ? detail::pow_rho(std::abs(a[k]) * inv, rho) : 0.0;
    std::ptrdiff_t bp = -1;
    for (std::size_t j = 0; j < k; ++j) {
      const double cand = f[j] + detail::pow_rho(std::abs(a[k] - a[j]) * inv, rho);
      if (cand > best) {
        best = cand;
        bp = static_cast<std::ptrdiff_t>(j);
      } else if (track && cand == best) {
        auto challenger = chain_of(pred, j);
        challenger.push_back(k);
        auto incumbent = bp < 0 ? std::vector<std::size_t>{k} : [&] {
          auto c = chain_of(pred, static_cast<std::size_t>(bp));
          c.push_back(k);
          return c;
        }();
        if (lex_less(challenger, incumbent)) bp = static_cast<std::ptrdiff_t>(j);
      }
    }
    f[k] = best;
    pred[k] = bp;
  }
  DpResult res{f[0], 0};
  for (std::size_t k = 1; k < n; ++k) {
    if (f[k] > res.scaled_sum) {
      res = {f[k], k};
    } else if (track && f[k] == res.scaled_sum) {
      if (lex_less(chain_of(pred, k), chain_of(pred, res.arg))) res.arg = k;
    }
  }
  if (pred_out) *pred_out = std::move(pred);
  return res;
}

VariationResult variation_impl(std::span<const cd> a, double rho, bool with_first) {
  if (rho == rho_infinity) return var_inf(a, with_first);
  if (a.size() == 1) {
    // no increments exist; the norm reduces to |a_0|
    return {with_first ? std::abs(a[0]) : 0.0, {0}};
  }
  const double scale = dp_scale(a, rho, with_first);
  std::vector<std::ptrdiff_t> pred;
  const DpResult dp = variation_dp(a, rho, with_first, scale, &pred);
  double value = scale * std::pow(dp.scaled_sum, 1.0 / rho);
  if (with_first) value = std::max(value, sup_abs(a));  // V^rho always dominates the sup
  return {value, chain_of(pred, dp.arg)};
}

double variation_value_impl(std::span<const cd> a, double rho, bool with_first) {
  if (a.empty()) throw std::invalid_argument("variation: empty curve");
  check_rho(rho);
  if (rho == rho_infinity) return var_inf(a, with_first).value;
  if (a.size() == 1) return with_first ? std::abs(a[0]) : 0.0;
  const double scale = dp_scale(a, rho, with_first);
  const DpResult dp = variation_dp(a, rho, with_first, scale, nullptr);
  double value = scale * std::pow(dp.scaled_sum, 1.0 / rho);
  if (with_first) value = std::max(value, sup_abs(a));
  return value;
}

}  // namespace

void SampledCurve::validate() const {
  if (params.empty()) throw std::invalid_argument("SampledCurve: length must be >= 1");
  if (params.size() != values.size())
    throw std::invalid_argument("SampledCurve: params/values length mismatch");
  check_params(params, "SampledCurve");
  check_values(values, "SampledCurve");
}

void SampledSurface::validate() const {
  if (eps_params.empty() || eta_params.empty())
    throw std::invalid_argument("SampledSurface: parameter lists must be nonempty");
  check_params(eps_params, "SampledSurface");
  check_params(eta_params, "SampledSurface");
  if (values.size() != eps_params.size())
    throw std::invalid_argument("SampledSurface: row count mismatch");
  for (const auto& row : values) {
    if (row.size() != eta_params.size())
      throw std::invalid_argument("SampledSurface: column count mismatch");
    check_values(row, "SampledSurface");
  }
}

VariationResult var_seminorm(const SampledCurve& curve, double rho) {
  curve.validate();
  check_rho(rho);
  return variation_impl(curve.values, rho, /*with_first=*/false);
}

VariationResult var_norm(const SampledCurve& curve, double rho) {
  curve.validate();
  check_rho(rho);
  return variation_impl(curve.values, rho, /*with_first=*/true);
}

double var_seminorm_value(std::span<const cd> values, double rho) {
  return variation_value_impl(values, rho, false);
}

double var_norm_value(std::span<const cd> values, double rho) {
  return variation_value_impl(values, rho, true);
}

double var_oracle_exhaustive(const SampledCurve& curve, double rho, bool with_first_term) {
  curve.validate();
  check_rho(rho);
  const std::size_t n = curve.size();
  if (n > 20) throw std::invalid_argument("var_oracle_exhaustive: curve longer than 20 samples");
  std::span<const cd> a{curve.values};
  if (rho == rho_infinity) return var_inf(a, with_first_term).value;
  const double scale = dp_scale(a, rho, with_first_term);
  const double inv = 1.0 / scale;
  double best = 0.0;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::uint32_t m = mask;
    std::size_t prev = static_cast<std::size_t>(std::countr_zero(m));
    m &= m - 1;
    double acc = with_first_term ? detail::pow_rho(std::abs(a[prev]) * inv, rho) : 0.0;
    while (m != 0) {
      const std::size_t next = static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      acc += detail::pow_rho(std::abs(a[next] - a[prev]) * inv, rho);
      prev = next;
    }
    best = std::max(best, acc);
  }
  double value = scale * std::pow(best, 1.0 / rho);
  if (with_first_term) value = std::max(value, sup_abs(a));
  return value;
}

double curve_objective(const SampledCurve& curve, std::span<const std::size_t> idx,
                       double rho, bool with_first_term) {
  if (idx.empty()) throw std::invalid_argument("curve_objective: empty index set");
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (idx[t] >= curve.size() || (t > 0 && idx[t - 1] >= idx[t]))
      throw std::invalid_argument("curve_objective: indices must be strictly increasing");
  }
  const auto& a = curve.values;
  if (rho == rho_infinity) {
    double v = with_first_term ? std::abs(a[idx[0]]) : 0.0;
    for (std::size_t t = 1; t < idx.size(); ++t)
      v = std::max(v, std::abs(a[idx[t]] - a[idx[t - 1]]));
    return v;
  }
  double scale = 1.0;
  if (rho > 64.0) {
    if (with_first_term) scale = std::max(scale, std::abs(a[idx[0]]));
    for (std::size_t t = 1; t < idx.size(); ++t)
      scale = std::max(scale, std::abs(a[idx[t]] - a[idx[t - 1]]));
  }
  double acc = with_first_term ? detail::pow_rho(std::abs(a[idx[0]]) / scale, rho) : 0.0;
  for (std::size_t t = 1; t < idx.size(); ++t)
    acc += detail::pow_rho(std::abs(a[idx[t]] - a[idx[t - 1]]) / scale, rho);
  return scale * std::pow(acc, 1.0 / rho);
}

double surface_objective(const SampledSurface& surface, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols, double rho) {
  if (rows.size() < 2 || cols.size() < 2) return 0.0;
  const auto& v = surface.values;
  double scale = 1.0;
  if (rho > 64.0 && rho != rho_infinity) {
    for (std::size_t t = 1; t < rows.size(); ++t)
      for (std::size_t s = 1; s < cols.size(); ++s)
        scale = std::max(scale, std::abs(v[rows[t]][cols[s]] - v[rows[t]][cols[s - 1]] -
                                         v[rows[t - 1]][cols[s]] + v[rows[t - 1]][cols[s - 1]]));
  }
  double acc = 0.0;
  double sup = 0.0;
  for (std::size_t t = 1; t < rows.size(); ++t) {
    for (std::size_t s = 1; s < cols.size(); ++s) {
      const double d = std::abs(v[rows[t]][cols[s]] - v[rows[t]][cols[s - 1]] -
                                v[rows[t - 1]][cols[s]] + v[rows[t - 1]][cols[s - 1]]);
      sup = std::max(sup, d);
      acc += detail::pow_rho(d / scale, rho);
    }
  }
  if (rho == rho_infinity) return sup;
  return scale * std::pow(acc, 1.0 / rho);
}

namespace {

struct BivarBest {
  double scaled_sum = -1.0;
  std::vector<std::size_t> small, large;
};

// Exact biparameter maximum: enumerate subsets of the smaller axis, run the
// seminorm DP over the other axis with edge weights summed across the chosen
// row increments.
BivarBest bivar_exact(const std::vector<std::vector<cd>>& a, std::size_t ns, std::size_t nl,
                      double rho, double scale, bool swapped) {
  // a indexed [small][large]
  BivarBest best;
  const double inv = 1.0 / scale;
  std::vector<std::size_t> rows;
  std::vector<cd> diff((ns - 1) * nl);  // row increment workspace
  std::vector<double> g(nl);
  std::vector<std::ptrdiff_t> pred(nl);
  for (std::uint32_t mask = 0; mask < (1u << ns); ++mask) {
    if (std::popcount(mask) < 2) continue;
    rows.clear();
    for (std::size_t s = 0; s < ns; ++s)
      if (mask & (1u << s)) rows.push_back(s);
    const std::size_t m = rows.size() - 1;
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t l = 0; l < nl; ++l)
        diff[t * nl + l] = a[rows[t + 1]][l] - a[rows[t]][l];
    // seminorm DP over the large axis
    for (std::size_t l = 0; l < nl; ++l) {
      double fbest = 0.0;
      std::ptrdiff_t bp = -1;
      for (std::size_t j = 0; j < l; ++j) {
        double w = 0.0;
        for (std::size_t t = 0; t < m; ++t)
          w += detail::pow_rho(std::abs(diff[t * nl + l] - diff[t * nl + j]) * inv, rho);
        const double cand = g[j] + w;
        if (cand > fbest) {
          fbest = cand;
          bp = static_cast<std::ptrdiff_t>(j);
        } else if (cand == fbest) {
          auto challenger = chain_of(pred, j);
          challenger.push_back(l);
          auto incumbent = bp < 0 ? std::vector<std::size_t>{l} : [&] {
            auto c = chain_of(pred, static_cast<std::size_t>(bp));
            c.push_back(l);
            return c;
          }();
          if (lex_less(challenger, incumbent)) bp = static_cast<std::ptrdiff_t>(j);
        }
      }
      g[l] = fbest;
      pred[l] = bp;
    }
    double msum = g[0];
    std::size_t arg = 0;
    for (std::size_t l = 1; l < nl; ++l) {
      if (g[l] > msum) {
        msum = g[l];
        arg = l;
      } else if (g[l] == msum && lex_less(chain_of(pred, l), chain_of(pred, arg))) {
        arg = l;
      }
    }
    if (msum > best.scaled_sum) {
      best = {msum, rows, chain_of(pred, arg)};
    } else if (msum == best.scaled_sum) {
      auto chain = chain_of(pred, arg);
      // compare (eps_witness, eta_witness) in the original orientation
      const auto& ce = swapped ? chain : rows;
      const auto& cn = swapped ? rows : chain;
      const auto& be = swapped ? best.large : best.small;
      const auto& bn = swapped ? best.small : best.large;
      if (lex_less(ce, be) || (ce == be && lex_less(cn, bn))) best = {msum, rows, chain};
    }
  }
  return best;
}

}  // namespace

SurfaceVariationResult bivar_seminorm(const SampledSurface& surface, double rho,
                                      BivarMode mode, std::size_t exact_cap) {
  surface.validate();
  check_rho(rho);
  const std::size_t nr = surface.rows(), nc = surface.cols();
  if (nr < 2 || nc < 2) return {0.0, {}, {}};  // no rectangle exists

  if (mode == BivarMode::exact) {
    if (nr * nc > exact_cap)
      throw std::domain_error("bivar_seminorm: exact mode over the configured cap (" +
                              std::to_string(nr) + "x" + std::to_string(nc) + " > " +
                              std::to_string(exact_cap) + " cells)");
    double scale = 1.0;
    if (rho > 64.0 && rho != rho_infinity) {
      for (std::size_t t = 1; t < nr; ++t)
        for (std::size_t s = 1; s < nc; ++s)
          for (std::size_t t0 = 0; t0 < t; ++t0)
            for (std::size_t s0 = 0; s0 < s; ++s0)
              scale = std::max(scale,
                               std::abs(surface.values[t][s] - surface.values[t][s0] -
                                        surface.values[t0][s] + surface.values[t0][s0]));
    }
    const bool swap = nr > nc;
    std::vector<std::vector<cd>> a;
    if (swap) {
      a.assign(nc, std::vector<cd>(nr));
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[j][i] = surface.values[i][j];
    } else {
      a = surface.values;
    }
    if (rho == rho_infinity) {
      // sup of single rectangles; scan in lex order over (rows, cols)
      SurfaceVariationResult res{0.0, {0, 1}, {0, 1}};
      for (std::size_t i0 = 0; i0 < nr; ++i0)
        for (std::size_t i1 = i0 + 1; i1 < nr; ++i1)
          for (std::size_t j0 = 0; j0 < nc; ++j0)
            for (std::size_t j1 = j0 + 1; j1 < nc; ++j1) {
              const double d = std::abs(surface.values[i1][j1] - surface.values[i1][j0] -
                                        surface.values[i0][j1] + surface.values[i0][j0]);
              if (d > res.value) res = {d, {i0, i1}, {j0, j1}};
            }
      return res;
    }
    BivarBest best = bivar_exact(a, swap ? nc : nr, swap ? nr : nc, rho, scale, swap);
    SurfaceVariationResult res;
    res.value = scale * std::pow(best.scaled_sum, 1.0 / rho);
    res.eps_witness = swap ? best.large : best.small;
    res.eta_witness = swap ? best.small : best.large;
    return res;
  }

  // greedy: full grid, then best-improving single-index toggles
  std::vector<std::size_t> rows(nr), cols(nc);
  for (std::size_t i = 0; i < nr; ++i) rows[i] = i;
  for (std::size_t j = 0; j < nc; ++j) cols[j] = j;
  double cur = surface_objective(surface, rows, cols, rho);
  for (int pass = 0; pass < 64; ++pass) {
    double best_val = cur;
    bool improved = false;
    std::vector<std::size_t> best_rows, best_cols;
    auto consider = [&](std::vector<std::size_t> r, std::vector<std::size_t> c) {
      if (r.size() < 2 || c.size() < 2) return;
      const double v = surface_objective(surface, r, c, rho);
      if (v > best_val) {
        best_val = v;
        best_rows = std::move(r);
        best_cols = std::move(c);
        improved = true;
      }
    };
    for (std::size_t i = 0; i < nr; ++i) {
      auto r = rows;
      auto it = std::lower_bound(r.begin(), r.end(), i);
      if (it != r.end() && *it == i) r.erase(it); else r.insert(it, i);
      consider(std::move(r), cols);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      auto c = cols;
      auto it = std::lower_bound(c.begin(), c.end(), j);
      if (it != c.end() && *it == j) c.erase(it); else c.insert(it, j);
      consider(rows, std::move(c));
    }
    if (!improved) break;
    rows = std::move(best_rows);
    cols = std::move(best_cols);
    cur = best_val;
  }
  return {cur, rows, cols};
}

}  // namespace varrest
