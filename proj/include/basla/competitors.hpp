#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "basla/dataset.hpp"

namespace basla {

enum class Family {
  Normal,
  Logistic,
  Laplace,
  SkewNormal,
  SkewLogistic,
  SkewLaplace,
  AlphaSkewNormal,
  AlphaSkewLaplace,
  AlphaSkewLogistic,
  BASLa2,
};

inline constexpr std::array<Family, 10> kAllFamilies{
    Family::Normal,          Family::Logistic,         Family::Laplace,
    Family::SkewNormal,      Family::SkewLogistic,     Family::SkewLaplace,
    Family::AlphaSkewNormal, Family::AlphaSkewLaplace, Family::AlphaSkewLogistic,
    Family::BASLa2,
};

/// Stable identifier used on the command line and in reports.
std::string_view family_id(Family f) noexcept;

/// Accepts the stable ids and the short table labels (N, LG, La, SN, SLG,
/// SLa, ASN, ASLa, ASLG, BASLa2), case-insensitively.
std::optional<Family> parse_family(std::string_view id);

/// Number of free parameters: 2 for Normal/Logistic/Laplace, 3 otherwise.
std::size_t family_arity(Family f) noexcept;

/// Report column names for (location, scale, shape): location is "mu";
/// scale is "sigma" for the normal-based families and "beta" otherwise;
/// shape is "lambda" for the Azzalini-type skew families and "alpha" for
/// the alpha-skew families.
struct ParameterNames {
  std::string_view location;
  std::string_view scale;
  std::string_view shape;  // empty for two-parameter families
};
ParameterNames parameter_names(Family f) noexcept;

/// A family with a concrete parameter vector ordered (location, scale[, shape]).
class ModelSpec {
 public:
  ModelSpec(Family family, std::vector<double> params);

  Family family() const noexcept { return family_; }
  std::span<const double> params() const noexcept { return params_; }
  std::size_t k() const noexcept { return params_.size(); }

  double location() const noexcept { return params_[0]; }
  double scale() const noexcept { return params_[1]; }
  double shape() const noexcept { return params_.size() > 2 ? params_[2] : 0.0; }

 private:
  Family family_;
  std::vector<double> params_;
};

/// Natural log of the family density at z.
double log_pdf(const ModelSpec& spec, double z);

/// Unchecked variant for inner loops; params must satisfy the ModelSpec
/// invariants.
double log_density(Family f, std::span<const double> params, double z) noexcept;

/// Robust starting point: median location, mean absolute deviation from the
/// median as scale (population SD for Normal and SkewNormal), zero shape.
std::vector<double> default_start(Family f, const Dataset& data);

// Standard building blocks shared with the tests.
double log_normal_pdf_std(double u) noexcept;
double log_normal_cdf_std(double u) noexcept;
double log_logistic_pdf_std(double u) noexcept;
double log_logistic_cdf_std(double u) noexcept;
double log_laplace_cdf_std(double u) noexcept;

}  // namespace basla
