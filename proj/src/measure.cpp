#include "varrest/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "varrest/quadrature.hpp"

namespace varrest {

namespace {

// Below this value of u = 2 pi r the sinc-type profiles switch to series;
// the closed forms lose digits to cancellation as u -> 0.
constexpr double kSeriesCut = 0.5;

// sin(u)/u
double sinc_profile(double u) {
  if (std::abs(u) < kSeriesCut) {
    const double u2 = u * u;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 8; ++k) {
      term *= -u2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  return std::sin(u) / u;
}

// 3 (sin u - u cos u) / u^3
double ball_profile(double u) {
  if (std::abs(u) < kSeriesCut) {
    const double u2 = u * u;
    // 3 sum_{k>=1} (-1)^{k+1} 2k u^{2k-2} / (2k+1)!
    double fact = 6.0;  // (2k+1)! at k = 1
    double upow = 1.0, sum = 0.0, sign = 1.0;
    for (int k = 1; k <= 9; ++k) {
      sum += sign * 3.0 * (2.0 * k) * upow / fact;
      sign = -sign;
      upow *= u2;
      fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return sum;
  }
  const double u3 = u * u * u;
  return 3.0 * (std::sin(u) - u * std::cos(u)) / u3;
}

// (sin u - u cos u) / u = sum_{k>=1} (-1)^{k+1} 2k u^{2k} / (2k+1)!
double sphere_vartheta_profile(double u) {
  if (std::abs(u) < kSeriesCut) {
    const double u2 = u * u;
    double fact = 6.0;
    double upow = u2, sum = 0.0, sign = 1.0;
    for (int k = 1; k <= 9; ++k) {
      sum += sign * (2.0 * k) * upow / fact;
      sign = -sign;
      upow *= u2;
      fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return sum;
  }
  return (std::sin(u) - u * std::cos(u)) / u;
}

// 3 [(3 - u^2) sin u - 3u cos u] / u^3 = 3 sum_{k>=2} (-1)^k 2k(2k-2) u^{2k-2} / (2k+1)!
double ball_vartheta_profile(double u) {
  if (std::abs(u) < kSeriesCut) {
    const double u2 = u * u;
    double fact = 120.0;  // (2k+1)! at k = 2
    double upow = u2, sum = 0.0, sign = 1.0;
    for (int k = 2; k <= 10; ++k) {
      sum += sign * 3.0 * (2.0 * k) * (2.0 * k - 2.0) * upow / fact;
      sign = -sign;
      upow *= u2;
      fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return sum;
  }
  const double u3 = u * u * u;
  return 3.0 * ((3.0 - u * u) * std::sin(u) - 3.0 * u * std::cos(u)) / u3;
}

}  // namespace

void MeasureSpec::validate() const {
  if (kind == Kind::gaussian && !(alpha > 0.0 && std::isfinite(alpha)))
    throw std::invalid_argument("MeasureSpec: gaussian alpha must be a positive real");
}

const char* MeasureSpec::name() const {
  switch (kind) {
    case Kind::gaussian: return "gaussian";
    case Kind::ball_indicator: return "ball";
    case Kind::sphere_surface: return "sphere";
  }
  return "?";
}

double mu_hat_radial(const MeasureSpec& spec, double r) {
  spec.validate();
  switch (spec.kind) {
    case MeasureSpec::Kind::gaussian:
      return std::exp(-kPi * r * r / (spec.alpha * spec.alpha));
    case MeasureSpec::Kind::sphere_surface:
      return sinc_profile(kTwoPi * r);
    case MeasureSpec::Kind::ball_indicator:
      return ball_profile(kTwoPi * r);
  }
  return 0.0;
}

double mu_hat(const MeasureSpec& spec, Vec3 x) { return mu_hat_radial(spec, x.norm()); }

double vartheta_radial(const MeasureSpec& spec, double r) {
  spec.validate();
  switch (spec.kind) {
    case MeasureSpec::Kind::gaussian: {
      const double s = kPi * r * r / (spec.alpha * spec.alpha);
      return 2.0 * s * std::exp(-s);
    }
    case MeasureSpec::Kind::sphere_surface:
      return sphere_vartheta_profile(kTwoPi * r);
    case MeasureSpec::Kind::ball_indicator:
      return ball_vartheta_profile(kTwoPi * r);
  }
  return 0.0;
}

double vartheta(const MeasureSpec& spec, Vec3 x) { return vartheta_radial(spec, x.norm()); }

double grad_mu_hat_norm(const MeasureSpec& spec, double r) {
  if (r == 0.0) return 0.0;
  return std::abs(vartheta_radial(spec, r)) / r;
}

void mu_hat_batch(const MeasureSpec& spec, double eps, std::span<const double> r2,
                  std::span<double> out) {
  spec.validate();
  if (r2.size() != out.size()) throw std::invalid_argument("mu_hat_batch: size mismatch");
  switch (spec.kind) {
    case MeasureSpec::Kind::gaussian: {
      const double c = -kPi * eps * eps / (spec.alpha * spec.alpha);
      for (std::size_t i = 0; i < r2.size(); ++i) out[i] = std::exp(c * r2[i]);
      return;
    }
    case MeasureSpec::Kind::sphere_surface: {
      const double c = kTwoPi * eps;
      for (std::size_t i = 0; i < r2.size(); ++i) out[i] = sinc_profile(c * std::sqrt(r2[i]));
      return;
    }
    case MeasureSpec::Kind::ball_indicator: {
      const double c = kTwoPi * eps;
      for (std::size_t i = 0; i < r2.size(); ++i) out[i] = ball_profile(c * std::sqrt(r2[i]));
      return;
    }
  }
}

double check_ring_identity(const MeasureSpec& spec, Vec3 x, double a, double b,
                           std::size_t quad_points) {
  spec.validate();
  if (!(a > 0.0) || !(b >= a))
    throw std::invalid_argument("check_ring_identity: requires 0 < a <= b");
  if (a == b) return 0.0;
  const double r = x.norm();
  // integral of vartheta(t x) dt/t over [a, b], in s = log t
  const double integral = adaptive_simpson(
      [&](double s) { return vartheta_radial(spec, std::exp(s) * r); }, std::log(a),
      std::log(b), 1e-11, quad_points);
  const double lhs = mu_hat_radial(spec, a * r) - mu_hat_radial(spec, b * r);
  return std::abs(lhs - integral);
}

namespace {

struct LogLogFit {
  double exponent = 0.0;  // fitted e in c (1+r)^{-e}
  double rms = 0.0;
  std::size_t used = 0;
};

LogLogFit fit_decay(std::span<const double> radii, std::span<const double> env) {
  // least squares on log(env) = log c - e log(1+r), dropping underflowed rows
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (env[i] > 1e-300) {
      xs.push_back(std::log1p(radii[i]));
      ys.push_back(std::log(env[i]));
    }
  }
  LogLogFit fit;
  fit.used = xs.size();
  if (xs.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double resid = ys[i] - (intercept + slope * xs[i]);
    rss += resid * resid;
  }
  fit.exponent = -slope;
  fit.rms = std::sqrt(rss / n);
  return fit;
}

}  // namespace

DecayEstimate decay_exponents(const MeasureSpec& spec, std::span<const double> radii,
                              std::uint64_t seed) {
  spec.validate();
  if (radii.size() < 4) throw std::invalid_argument("decay_exponents: need at least 4 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw std::invalid_argument("decay_exponents: radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("decay_exponents: radii must be increasing");
  }
  if (!(radii.back() / radii.front() >= 100.0))
    throw std::invalid_argument("decay_exponents: radii must span at least a factor 100");

  Rng rng(seed);
  const int dirs = 8, window_samples = 24;
  std::vector<double> env_mu(radii.size()), env_grad(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    // envelope over a thin log-radial window reaching toward the next radius
    const double ratio =
        (i + 1 < radii.size()) ? radii[i + 1] / radii[i] : radii[i] / radii[i - 1];
    const double span = std::sqrt(ratio);
    double m = 0.0, g = 0.0;
    for (int d = 0; d < dirs; ++d) {
      const Vec3 dir = rng.unit_vector();
      for (int w = 0; w < window_samples; ++w) {
        const double r = radii[i] * std::pow(span, double(w) / window_samples);
        m = std::max(m, std::abs(mu_hat(spec, r * dir)));
        g = std::max(g, grad_mu_hat_norm(spec, r));
      }
    }
    env_mu[i] = m;
    env_grad[i] = g;
  }

  DecayEstimate est;
  est.radii_used.assign(radii.begin(), radii.end());
  const LogLogFit fa = fit_decay(radii, env_mu);
  const LogLogFit fb = fit_decay(radii, env_grad);
  est.alpha_hat = fa.exponent;
  est.beta_hat = fb.exponent;
  est.alpha_residual = fa.rms;
  est.beta_residual = fb.rms;
  if (fa.used < radii.size() || fa.exponent > est.clamp_cap) {
    est.alpha_hat = est.clamp_cap;
    est.alpha_clamped = true;
  }
  if (fb.used < radii.size() || fb.exponent > est.clamp_cap) {
    est.beta_hat = est.clamp_cap;
    est.beta_clamped = true;
  }
  est.passes_ramos = est.alpha_hat + est.beta_hat > 1.0;
  return est;
}

SignCheckResult condition_a_sign_check(const MeasureSpec& spec, std::span<const Vec3> samples) {
  spec.validate();
  if (samples.empty()) throw std::invalid_argument("condition_a_sign_check: empty sample list");
  SignCheckResult res;
  res.worst_witness = samples[0];
  res.worst_value = vartheta(spec, samples[0]);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double v = vartheta(spec, samples[i]);
    if (v < res.worst_value) {
      res.worst_value = v;
      res.worst_witness = samples[i];
    }
  }
  res.ok = res.worst_value >= -1e-12;
  return res;
}

}  // namespace varrest
