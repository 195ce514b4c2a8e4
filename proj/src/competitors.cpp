#include "basla/competitors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "basla/basla.hpp"

namespace basla {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);
constexpr double kPiSqOver3 = std::numbers::pi * std::numbers::pi / 3.0;

struct FamilyInfo {
  Family family;
  std::string_view id;
  std::string_view label;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 10> kInfo{{
    {Family::Normal, "normal", "N", 2},
    {Family::Logistic, "logistic", "LG", 2},
    {Family::Laplace, "laplace", "La", 2},
    {Family::SkewNormal, "skew-normal", "SN", 3},
    {Family::SkewLogistic, "skew-logistic", "SLG", 3},
    {Family::SkewLaplace, "skew-laplace", "SLa", 3},
    {Family::AlphaSkewNormal, "alpha-skew-normal", "ASN", 3},
    {Family::AlphaSkewLaplace, "alpha-skew-laplace", "ASLa", 3},
    {Family::AlphaSkewLogistic, "alpha-skew-logistic", "ASLG", 3},
    {Family::BASLa2, "basla2", "BASLa2", 3},
}};

const FamilyInfo& info(Family f) { return kInfo[static_cast<std::size_t>(f)]; }

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

double log_alpha_factor(double alpha, double u) {
  const double d = 1.0 - alpha * u;
  return std::log1p(d * d);
}

}  // namespace

std::string_view family_id(Family f) noexcept { return info(f).id; }

std::optional<Family> parse_family(std::string_view id) {
  for (const auto& fi : kInfo) {
    if (iequals(id, fi.id) || iequals(id, fi.label)) return fi.family;
  }
  return std::nullopt;
}

std::size_t family_arity(Family f) noexcept { return info(f).arity; }

ParameterNames parameter_names(Family f) noexcept {
  switch (f) {
    case Family::Normal: return {"mu", "sigma", ""};
    case Family::Logistic:
    case Family::Laplace: return {"mu", "beta", ""};
    case Family::SkewNormal: return {"mu", "sigma", "lambda"};
    case Family::SkewLogistic:
    case Family::SkewLaplace: return {"mu", "beta", "lambda"};
    case Family::AlphaSkewNormal: return {"mu", "sigma", "alpha"};
    case Family::AlphaSkewLaplace:
    case Family::AlphaSkewLogistic:
    case Family::BASLa2: return {"mu", "beta", "alpha"};
  }
  return {"mu", "beta", ""};
}

ModelSpec::ModelSpec(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
  if (params_.size() != family_arity(family_)) {
    throw std::invalid_argument(std::string(family_id(family_)) + ": expected " +
                                std::to_string(family_arity(family_)) + " parameters, got " +
                                std::to_string(params_.size()));
  }
  for (double p : params_) {
    if (!std::isfinite(p)) throw std::invalid_argument("ModelSpec: non-finite parameter");
  }
  if (!(params_[1] > 0.0)) throw std::invalid_argument("ModelSpec: scale must be > 0");
}

double log_normal_pdf_std(double u) noexcept { return -0.5 * u * u - kHalfLog2Pi; }

double log_normal_cdf_std(double u) noexcept {
  if (u < -30.0) {
    // Asymptotic Mills-ratio expansion; erfc underflows beyond this point.
    const double u2 = u * u;
    return -0.5 * u2 - std::log(-u) - kHalfLog2Pi + std::log1p(-1.0 / u2 + 3.0 / (u2 * u2));
  }
  if (u > 0.0) return std::log1p(-0.5 * std::erfc(u / std::numbers::sqrt2));
  return std::log(0.5 * std::erfc(-u / std::numbers::sqrt2));
}

double log_logistic_pdf_std(double u) noexcept {
  const double a = std::abs(u);
  return -a - 2.0 * std::log1p(std::exp(-a));
}

double log_logistic_cdf_std(double u) noexcept {
  return u < 0.0 ? u - std::log1p(std::exp(u)) : -std::log1p(std::exp(-u));
}

double log_laplace_cdf_std(double u) noexcept {
  return u <= 0.0 ? -kLn2 + u : std::log1p(-0.5 * std::exp(-u));
}

double log_density(Family f, std::span<const double> params, double z) noexcept {
  const double loc = params[0];
  const double scale = params[1];
  const double shape = params.size() > 2 ? params[2] : 0.0;
  const double u = (z - loc) / scale;
  const double log_scale = std::log(scale);
  switch (f) {
    case Family::Normal:
      return log_normal_pdf_std(u) - log_scale;
    case Family::Logistic:
      return log_logistic_pdf_std(u) - log_scale;
    case Family::Laplace:
      return -kLn2 - std::abs(u) - log_scale;
    case Family::SkewNormal:
      return kLn2 + log_normal_pdf_std(u) + log_normal_cdf_std(shape * u) - log_scale;
    case Family::SkewLogistic:
      return kLn2 + log_logistic_pdf_std(u) + log_logistic_cdf_std(shape * u) - log_scale;
    case Family::SkewLaplace:
      // 2 * (1/2) e^{-|u|} * Psi(shape u)
      return -std::abs(u) + log_laplace_cdf_std(shape * u) - log_scale;
    case Family::AlphaSkewNormal:
      return log_alpha_factor(shape, u) + log_normal_pdf_std(u) -
             std::log(2.0 + shape * shape) - log_scale;
    case Family::AlphaSkewLaplace:
      return log_alpha_factor(shape, u) - kLn2 - std::abs(u) -
             std::log(2.0 + 2.0 * shape * shape) - log_scale;
    case Family::AlphaSkewLogistic:
      return log_alpha_factor(shape, u) + log_logistic_pdf_std(u) -
             std::log(2.0 + kPiSqOver3 * shape * shape) - log_scale;
    case Family::BASLa2:
      return 2.0 * log_alpha_factor(shape, u) - std::abs(u) - std::log(normalizer(shape)) -
             kLn2 - log_scale;
  }
  return -std::numeric_limits<double>::infinity();
}

double log_pdf(const ModelSpec& spec, double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("log_pdf: non-finite z");
  return log_density(spec.family(), spec.params(), z);
}

std::vector<double> default_start(Family f, const Dataset& data) {
  const auto xs = data.values();
  const double location = median(xs);
  double scale = 0.0;
  if (f == Family::Normal || f == Family::SkewNormal) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    scale = std::sqrt(ss / static_cast<double>(xs.size()));
  } else {
    for (double x : xs) scale += std::abs(x - location);
    scale /= static_cast<double>(xs.size());
  }
  if (!(scale > 0.0)) {
    throw DataError("dataset '" + data.name() + "' has degenerate scale (no spread)");
  }
  std::vector<double> start{location, scale};
  if (family_arity(f) == 3) start.push_back(0.0);
  return start;
}

}  // namespace basla
