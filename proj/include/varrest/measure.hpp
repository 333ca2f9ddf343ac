#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "varrest/core.hpp"

namespace varrest {

// Catalog of normalized, even averaging measures with closed-form Fourier
// transforms. All members are radial, so mu_hat and its radial derivative
// are scalar profiles of |x|.
struct MeasureSpec {
  enum class Kind { gaussian, ball_indicator, sphere_surface };

  Kind kind = Kind::gaussian;
  double alpha = 1.0;  // Gaussian width parameter, density alpha^3 e^{-pi alpha^2 |x|^2}

  static MeasureSpec gaussian(double alpha) { return {Kind::gaussian, alpha}; }
  static MeasureSpec ball_indicator() { return {Kind::ball_indicator, 0.0}; }
  static MeasureSpec sphere_surface() { return {Kind::sphere_surface, 0.0}; }

  void validate() const;  // alpha > 0 for the Gaussian kind
  const char* name() const;
};

// mu_hat profiles at radius r = |x|:
//   gaussian(alpha):  e^{-pi r^2 / alpha^2}
//   sphere_surface:   sin(2 pi r) / (2 pi r)
//   ball_indicator:   3 (sin u - u cos u) / u^3,  u = 2 pi r
// The removable singularities at r = 0 switch to power series.
double mu_hat_radial(const MeasureSpec& spec, double r);
double mu_hat(const MeasureSpec& spec, Vec3 x);

// vartheta(x) = -x . grad mu_hat(x) = -r dmu_hat/dr, again a radial profile.
double vartheta_radial(const MeasureSpec& spec, double r);
double vartheta(const MeasureSpec& spec, Vec3 x);

// |grad mu_hat|(r) = |vartheta_radial(r)| / r (0 at r = 0).
double grad_mu_hat_norm(const MeasureSpec& spec, double r);

// out[i] = mu_hat(spec, eps * sqrt(r2[i])); batch form used by the
// quadrature pipelines.
void mu_hat_batch(const MeasureSpec& spec, double eps, std::span<const double> r2,
                  std::span<double> out);

// Residual |mu_hat(a x) - mu_hat(b x) - int_a^b vartheta(t x) dt/t| with the
// integral done adaptively in log t. quad_points bounds the integrand
// evaluations.
double check_ring_identity(const MeasureSpec& spec, Vec3 x, double a, double b,
                           std::size_t quad_points = 20000);

struct DecayEstimate {
  double alpha_hat = 0.0;  // fitted decay exponent of |mu_hat|
  double beta_hat = 0.0;   // fitted decay exponent of |grad mu_hat|
  std::vector<double> radii_used;
  bool passes_ramos = false;  // alpha_hat + beta_hat > 1
  double alpha_residual = 0.0, beta_residual = 0.0;  // rms log-log fit residuals
  bool alpha_clamped = false, beta_clamped = false;
  double clamp_cap = 32.0;
};

// Least-squares fit of sup|mu_hat| (and sup|grad mu_hat|) against
// c (1+r)^{-e} in log-log coordinates. The sup at each radius is taken over
// random directions and a thin log-radial window, which tracks the envelope
// of the oscillatory profiles. Super-polynomial decay is clamped at
// clamp_cap and flagged. Requires >= 4 radii spanning at least a factor 100.
DecayEstimate decay_exponents(const MeasureSpec& spec, std::span<const double> radii,
                              std::uint64_t seed = 1);

struct SignCheckResult {
  bool ok = false;
  Vec3 worst_witness;
  double worst_value = 0.0;
};

// Checks vartheta >= -1e-12 at every sample (Theorem condition (a) probe);
// reports the minimizing sample.
SignCheckResult condition_a_sign_check(const MeasureSpec& spec, std::span<const Vec3> samples);

}  // namespace varrest
