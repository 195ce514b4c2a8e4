#include "basla/extensions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "basla/basla.hpp"
#include "basla/quadrature.hpp"

namespace basla {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogHalf = -std::numbers::ln2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double log_laplace_cdf(double x) {
  return x <= 0.0 ? kLogHalf + x : std::log1p(-0.5 * std::exp(-x));
}

// log of the unnormalized density: polynomial kernel times the base.
double log_kernel(const ExtensionParams& params, double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("extension pdf: non-finite z");
  const double value = std::visit(
      Overloaded{
          [z](const TwoParam& p) {
            if (std::abs(z) > 1e30) return -kInf;
            const double d1 = 1.0 - p.alpha1 * z;
            const double d2 = 1.0 - p.alpha2 * z;
            return 2.0 * std::log1p(d1 * d1) + 2.0 * std::log1p(d2 * d2) + kLogHalf - std::abs(z);
          },
          [z](const AlphaBeta& p) {
            if (std::abs(z) > 1e30) return -kInf;
            const double d = 1.0 - p.alpha * z - p.beta_shape * z * z * z;
            return 2.0 * std::log1p(d * d) + kLogHalf - std::abs(z);
          },
          [z](const Generalized& p) {
            if (std::abs(z) > 1e30) return -kInf;
            const double d = 1.0 - p.alpha * z;
            return 2.0 * std::log1p(d * d) + kLogHalf - std::abs(z) +
                   log_laplace_cdf(p.lambda * z);
          },
          [z](const LogFamily& p) {
            if (!(z > 0.0)) throw std::invalid_argument("log family pdf: z must be > 0");
            const double y = std::log(z);
            const double d = 1.0 - p.alpha * y;
            return 2.0 * std::log1p(d * d) + kLogHalf - y - std::abs(y);
          },
      },
      params);
  return std::isnan(value) ? -kInf : value;
}

double closed_form_normalizer(const ExtensionParams& params) {
  return std::visit(
      Overloaded{
          [](const TwoParam& p) {
            const double a1 = p.alpha1;
            const double a2 = p.alpha2;
            const double a2s = a2 * a2;
            const double a1s = a1 * a1;
            return 16.0 * (1.0 + 4.0 * a2s + 6.0 * a2s * a2s + 8.0 * a1 * (a2 + 6.0 * a2s * a2) +
                           48.0 * a1s * a1 * (a2 + 15.0 * a2s * a2) +
                           4.0 * a1s * (1.0 + 24.0 * a2s + 90.0 * a2s * a2s) +
                           6.0 * a1s * a1s * (1.0 + 60.0 * (a2s + 7.0 * a2s * a2s)));
          },
          [](const AlphaBeta& p) {
            const double a = p.alpha;
            const double b = p.beta_shape;
            const double a2 = a * a;
            const double b2 = b * b;
            return 4.0 * (1.0 + 4.0 * a2 + 6.0 * a2 * a2 + 96.0 * a * b + 720.0 * a2 * a * b +
                          1440.0 * b2 + 60480.0 * a2 * b2 + 3628800.0 * a * b2 * b +
                          119750400.0 * b2 * b2);
          },
          [](const Generalized& p) {
            const double a = p.alpha;
            const double l = p.lambda;
            const double a2 = a * a;
            const double s = std::sqrt(l * l);
            const double l2 = l * l;
            const double inner = 2.0 * (1.0 + 6.0 * a2) * l2 + (5.0 + 18.0 * a2) * l2 * l +
                                 (1.0 + 3.0 * a2) * l2 * l2 * (4.0 + s);
            return 2.0 / l *
                   ((1.0 + 4.0 * a2 + 6.0 * a2 * a2) * l - 2.0 * a * inner / std::pow(1.0 + s, 4));
          },
          [](const LogFamily& p) { return normalizer(p.alpha); },
      },
      params);
}

double quadrature_normalizer(const ExtensionParams& params) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  const std::array<double, 1> kink{0.0};
  if (std::holds_alternative<LogFamily>(params)) {
    // Integrate the z-space density over y = log z (Jacobian e^y).
    auto f = [&](double y) {
      const double z = std::exp(y);
      if (!(z > 0.0) || !std::isfinite(z)) return 0.0;
      return std::exp(log_kernel(params, z) + y);
    };
    return integrate_oracle(f, -kInf, kInf, kink, opts);
  }
  auto f = [&](double z) { return std::exp(log_kernel(params, z)); };
  return integrate_oracle(f, -kInf, kInf, kink, opts);
}

void validate(const ExtensionParams& params) {
  std::visit(Overloaded{
                 [](const TwoParam& p) {
                   if (!std::isfinite(p.alpha1) || !std::isfinite(p.alpha2))
                     throw std::invalid_argument("TwoParam: non-finite parameter");
                 },
                 [](const AlphaBeta& p) {
                   if (!std::isfinite(p.alpha) || !std::isfinite(p.beta_shape))
                     throw std::invalid_argument("AlphaBeta: non-finite parameter");
                 },
                 [](const Generalized& p) {
                   if (!std::isfinite(p.alpha) || !std::isfinite(p.lambda))
                     throw std::invalid_argument("Generalized: non-finite parameter");
                   if (p.lambda == 0.0)
                     throw std::invalid_argument(
                         "Generalized: lambda = 0 makes the density indeterminate");
                 },
                 [](const LogFamily& p) {
                   if (!std::isfinite(p.alpha))
                     throw std::invalid_argument("LogFamily: non-finite parameter");
                 },
             },
             params);
}

}  // namespace

std::string extension_name(const ExtensionParams& params) {
  return std::visit(Overloaded{
                        [](const TwoParam&) { return std::string("two-param"); },
                        [](const AlphaBeta&) { return std::string("alpha-beta"); },
                        [](const Generalized&) { return std::string("generalized"); },
                        [](const LogFamily&) { return std::string("log-basla2"); },
                    },
                    params);
}

double laplace_cdf(double x) noexcept {
  return x <= 0.0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
}

NormalizerCheck check_normalizer(const ExtensionParams& params) {
  validate(params);
  NormalizerCheck c{};
  c.closed_form = closed_form_normalizer(params);
  c.quadrature = quadrature_normalizer(params);
  c.relative_difference = std::abs(c.closed_form - c.quadrature) / c.quadrature;
  // The generalized family always uses the numeric constant.
  const bool numeric_only = std::holds_alternative<Generalized>(params);
  c.overridden = !(c.relative_difference <= 1e-6);
  c.used = (c.overridden || numeric_only) ? c.quadrature : c.closed_form;
  return c;
}

ExtensionDensity::ExtensionDensity(const ExtensionParams& params)
    : params_(params), check_(check_normalizer(params)) {}

double ExtensionDensity::pdf(double z) const {
  return std::exp(log_kernel(params_, z) - std::log(check_.used));
}

std::string ExtensionDensity::override_note() const {
  if (!check_.overridden) return {};
  return extension_name(params_) + ": closed-form normalizer " + std::to_string(check_.closed_form) +
         " replaced by quadrature value " + std::to_string(check_.quadrature) +
         " (relative difference " + std::to_string(check_.relative_difference) + ")";
}

double pdf_two_param(double z, double alpha1, double alpha2) {
  return ExtensionDensity(TwoParam{alpha1, alpha2}).pdf(z);
}

double pdf_alpha_beta(double z, double alpha, double beta_shape) {
  return ExtensionDensity(AlphaBeta{alpha, beta_shape}).pdf(z);
}

double pdf_generalized(double z, double alpha, double lambda) {
  return ExtensionDensity(Generalized{alpha, lambda}).pdf(z);
}

double pdf_log_family(double z, double alpha) {
  return ExtensionDensity(LogFamily{alpha}).pdf(z);
}

}  // namespace basla
