#pragma once

#include <array>

namespace basla {

/// Parameters of the location-scale Balakrishnan alpha skew Laplace family.
/// alpha is the skewness, mu the location and beta (> 0) the scale. The
/// standard form is (alpha, 0, 1).
class BASLaParams {
 public:
  explicit BASLaParams(double alpha, double mu = 0.0, double beta = 1.0);

  static BASLaParams standard(double alpha) { return BASLaParams(alpha); }

  double alpha() const noexcept { return alpha_; }
  double mu() const noexcept { return mu_; }
  double beta() const noexcept { return beta_; }

  /// (z - mu) / beta
  double standardize(double z) const noexcept { return (z - mu_) / beta_; }

 private:
  double alpha_;
  double mu_;
  double beta_;
};

struct MomentSummary {
  double mean;
  double variance;
  double skewness_beta1;  // squared skewness mu3^2 / mu2^3
  double kurtosis_beta2;  // mu4 / mu2^2
  std::array<double, 4> raw_moments;  // E Z^1 .. E Z^4
};

struct Interval {
  double lo;
  double hi;
};

/// Extremes of the standard-form moment functionals over alpha in R,
/// including the alpha -> +-inf limits.
struct MomentBounds {
  Interval mean;
  Interval variance;
  Interval skewness_beta1;
  Interval kurtosis_beta2;
};

/// Symmetric component as a mixture of double-sided gamma densities
/// |z|^(s-1) e^{-|z|} / (2 (s-1)!) with shapes s = 1, 3, 5.
struct MixtureDecomposition {
  std::array<double, 3> symmetric_weights;
  std::array<int, 3> component_shapes{1, 3, 5};
};

/// C2(alpha) = 4 (1 + 4 alpha^2 + 6 alpha^4).
double normalizer(double alpha) noexcept;

/// Polynomial factor [(1 - alpha u)^2 + 1]^2 of the standard density.
double skew_kernel(double u, double alpha) noexcept;

double pdf(double z, const BASLaParams& p);
double log_pdf(double z, const BASLaParams& p);

/// Closed-form distribution function, two branches split at z = mu.
double cdf(double z, const BASLaParams& p);

/// Inverse of cdf by bracketed bisection seeded at the Laplace quantile.
double quantile(double q, const BASLaParams& p);

/// Moment generating function of the standard form, |t| < 1.
double mgf(double t, double alpha);

/// E Z^r for the standard form.
double raw_moment(unsigned r, double alpha);

MomentSummary moment_summary(double alpha);

MomentBounds moment_bounds();

MixtureDecomposition decompose(double alpha);

// Bimodal Laplace BLa(4): the alpha -> +-inf limit, z^4 e^{-|z|} / 48.
double bimodal_laplace_pdf(double z) noexcept;
double bimodal_laplace_cdf(double z) noexcept;
double bimodal_laplace_mgf(double t);

}  // namespace basla
