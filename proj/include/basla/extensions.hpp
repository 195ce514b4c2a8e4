#pragma once

#include <string>
#include <variant>

namespace basla {

/// Product kernel [(1 - a1 z)^2 + 1]^2 [(1 - a2 z)^2 + 1]^2 on a Laplace base.
struct TwoParam {
  double alpha1;
  double alpha2;
};

/// Kernel [(1 - alpha z - beta_shape z^3)^2 + 1]^2 on a Laplace base.
struct AlphaBeta {
  double alpha;
  double beta_shape;
};

/// Core kernel times the Laplace cdf Psi(lambda z); lambda != 0.
struct Generalized {
  double alpha;
  double lambda;
};

/// Z = e^Y with Y standard BASLa2(alpha); support z > 0.
struct LogFamily {
  double alpha;
};

using ExtensionParams = std::variant<TwoParam, AlphaBeta, Generalized, LogFamily>;

std::string extension_name(const ExtensionParams& params);

/// Closed-form normalizer against its quadrature value. `used` is the closed form
/// constant unless the two differ by more than 1e-6 relative.
struct NormalizerCheck {
  double closed_form;
  double quadrature;
  double used;
  bool overridden;
  double relative_difference;
};

/// Standard Laplace cdf.
double laplace_cdf(double x) noexcept;

/// A density of one extension family with its normalizer resolved once.
class ExtensionDensity {
 public:
  explicit ExtensionDensity(const ExtensionParams& params);

  double pdf(double z) const;
  const ExtensionParams& params() const noexcept { return params_; }
  const NormalizerCheck& normalizer() const noexcept { return check_; }

  /// Human-readable note when the quadrature normalizer replaced the
  /// closed-form one; empty otherwise.
  std::string override_note() const;

 private:
  ExtensionParams params_;
  NormalizerCheck check_{};
};

NormalizerCheck check_normalizer(const ExtensionParams& params);

// Convenience wrappers; each resolves the normalizer per call.
double pdf_two_param(double z, double alpha1, double alpha2);
double pdf_alpha_beta(double z, double alpha, double beta_shape);
double pdf_generalized(double z, double alpha, double lambda);
double pdf_log_family(double z, double alpha);

}  // namespace basla
