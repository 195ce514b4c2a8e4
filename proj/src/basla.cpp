#include "basla/basla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace basla {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double z, const char* what) {
  if (!std::isfinite(z)) throw std::invalid_argument(what);
}

// Coefficients of [(1 - a u)^2 + 1]^2 in powers of u.
std::array<double, 5> kernel_coefficients(double a) {
  const double a2 = a * a;
  return {4.0, -8.0 * a, 8.0 * a2, -4.0 * a2 * a, a2 * a2};
}

constexpr std::array<double, 5> kFactorial{1.0, 1.0, 2.0, 6.0, 24.0};

// Sum c_k a^k when |a| <= 1, otherwise sum c_k a^(k - deg). Callers track the
// dropped a^deg factor so that high-degree ratios never overflow.
double scaled_poly(std::span<const double> c, double a) {
  double acc = 0.0;
  if (std::abs(a) <= 1.0) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
  } else {
    const double x = 1.0 / a;
    for (double ck : c) acc = acc * x + ck;
  }
  return acc;
}

// N(a) / D(a) for polynomials given by ascending coefficients.
double ratio(std::span<const double> num, std::span<const double> den,
             double a) {
  const double r = scaled_poly(num, a) / scaled_poly(den, a);
  if (std::abs(a) <= 1.0) return r;
  const int shift = static_cast<int>(num.size()) - static_cast<int>(den.size());
  return r * std::pow(a, shift);
}

constexpr std::array<double, 4> kMeanNum{0.0, -4.0, 0.0, -24.0};
constexpr std::array<double, 5> kDen{1.0, 0.0, 4.0, 0.0, 6.0};
constexpr std::array<double, 9> kDenSq{1.0, 0.0, 8.0, 0.0, 28.0, 0.0, 48.0, 0.0, 36.0};
constexpr std::array<double, 9> kVarPoly{1.0, 0.0, 20.0, 0.0, 96.0, 0.0, 216.0, 0.0, 540.0};
// alpha * (3 + 52a^2 + 96a^4 - 432a^6 - 2700a^8 - 6480a^10)
constexpr std::array<double, 12> kSkewPoly{0.0, 3.0, 0.0, 52.0, 0.0, 96.0,
                                           0.0, -432.0, 0.0, -2700.0, 0.0, -6480.0};
constexpr std::array<double, 17> kKurtPoly{1.0,     0.0, 48.0,     0.0, 566.0,    0.0,
                                           3800.0,  0.0, 20820.0,  0.0, 77856.0,  0.0,
                                           185544.0, 0.0, 246240.0, 0.0, 90720.0};
constexpr std::array<double, 17> kVarPolySq = [] {
  std::array<double, 17> out{};
  for (std::size_t i = 0; i < kVarPoly.size(); ++i)
    for (std::size_t j = 0; j < kVarPoly.size(); ++j) out[i + j] += kVarPoly[i] * kVarPoly[j];
  return out;
}();

double mean_closed(double a) { return ratio(kMeanNum, kDen, a); }

double variance_closed(double a) { return 2.0 * ratio(kVarPoly, kDenSq, a); }

double beta1_closed(double a) {
  // 8 (a S(a))^2 / P(a)^3 with deg(a S) = 11 and deg P = 8.
  const double s = scaled_poly(kSkewPoly, a);
  const double p = scaled_poly(kVarPoly, a);
  const double r = 8.0 * s * s / (p * p * p);
  return std::abs(a) <= 1.0 ? r : r / (a * a);
}

double beta2_closed(double a) { return 6.0 * ratio(kKurtPoly, kVarPolySq, a); }

// Standard-form cdf.
double standard_cdf(double u, double a) {
  const auto c = kernel_coefficients(a);
  const double two_c = 2.0 * normalizer(a);
  if (u <= 0.0) {
    // int_{-inf}^u t^k e^t dt = e^u sum_j (-1)^(k-j) k!/j! u^j
    double s = 0.0;
    for (int k = 0; k <= 4; ++k) {
      double inner = 0.0;
      double uj = 1.0;
      for (int j = 0; j <= k; ++j) {
        const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        inner += sign * kFactorial[k] / kFactorial[j] * uj;
        uj *= u;
      }
      s += c[k] * inner;
    }
    return std::exp(u) * s / two_c;
  }
  // int_u^inf t^k e^{-t} dt = e^{-u} sum_j k!/j! u^j
  double tail = 0.0;
  for (int k = 0; k <= 4; ++k) {
    double inner = 0.0;
    double uj = 1.0;
    for (int j = 0; j <= k; ++j) {
      inner += kFactorial[k] / kFactorial[j] * uj;
      uj *= u;
    }
    tail += c[k] * inner;
  }
  return 1.0 - std::exp(-u) * tail / two_c;
}

}  // namespace

BASLaParams::BASLaParams(double alpha, double mu, double beta)
    : alpha_(alpha), mu_(mu), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(mu)) {
    throw std::invalid_argument("BASLaParams: alpha and mu must be finite");
  }
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw std::invalid_argument("BASLaParams: beta must be finite and > 0");
  }
}

double normalizer(double alpha) noexcept {
  const double a2 = alpha * alpha;
  return 4.0 * (1.0 + 4.0 * a2 + 6.0 * a2 * a2);
}

double skew_kernel(double u, double alpha) noexcept {
  const double d = 1.0 - alpha * u;
  const double q = d * d + 1.0;
  return q * q;
}

double log_pdf(double z, const BASLaParams& p) {
  require_finite(z, "basla::log_pdf: non-finite z");
  const double u = p.standardize(z);
  if (std::abs(u) > 1e100) return -kInf;
  const double d = 1.0 - p.alpha() * u;
  return 2.0 * std::log1p(d * d) - std::abs(u) - std::log(normalizer(p.alpha())) -
         std::log(2.0 * p.beta());
}

double pdf(double z, const BASLaParams& p) { return std::exp(log_pdf(z, p)); }

double cdf(double z, const BASLaParams& p) {
  if (std::isnan(z)) throw std::invalid_argument("basla::cdf: NaN z");
  if (z == -kInf) return 0.0;
  if (z == kInf) return 1.0;
  return std::clamp(standard_cdf(p.standardize(z), p.alpha()), 0.0, 1.0);
}

double quantile(double q, const BASLaParams& p) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("basla::quantile: q must lie in (0, 1)");
  }
  const double a = p.alpha();
  const double seed = q < 0.5 ? std::log(2.0 * q) : -std::log(2.0 * (1.0 - q));
  double lo = seed - 1.0;
  double hi = seed + 1.0;
  for (double width = 1.0; standard_cdf(lo, a) > q; width *= 2.0) lo -= width;
  for (double width = 1.0; standard_cdf(hi, a) < q; width *= 2.0) hi += width;

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = standard_cdf(mid, a);
    if (f == q) break;
    (f < q ? lo : hi) = mid;
  }
  return p.mu() + p.beta() * mid;
}

double mgf(double t, double alpha) {
  if (!(std::abs(t) < 1.0)) {
    throw std::domain_error("basla::mgf: requires |t| < 1");
  }
  const double a = alpha;
  const double a2 = a * a;
  const double s = t * t - 1.0;
  const double s2 = s * s;
  const double t2 = t * t;
  const double num = -s2 * s2 - 4.0 * t * a * s2 * s - 4.0 * a2 * s2 * (3.0 * t2 + 1.0) -
                     24.0 * t * a2 * a * (t2 * t2 - 1.0) -
                     6.0 * a2 * a2 * (1.0 + 5.0 * t2 * t2 + 10.0 * t2);
  const double den = s2 * s2 * s * (1.0 + 4.0 * a2 + 6.0 * a2 * a2);
  return num / den;
}

double raw_moment(unsigned r, double alpha) {
  // (1/2C) sum_k c_k int z^(r+k) e^{-|z|} dz, the integral being
  // (1 + (-1)^(r+k)) (r+k)!.
  const auto c = kernel_coefficients(alpha);
  double s = 0.0;
  for (unsigned k = 0; k <= 4; ++k) {
    if ((r + k) % 2 != 0) continue;
    s += c[k] * 2.0 * std::tgamma(static_cast<double>(r + k) + 1.0);
  }
  return s / (2.0 * normalizer(alpha));
}

MomentSummary moment_summary(double alpha) {
  MomentSummary m{};
  for (unsigned r = 1; r <= 4; ++r) m.raw_moments[r - 1] = raw_moment(r, alpha);
  m.mean = mean_closed(alpha);
  m.variance = variance_closed(alpha);
  m.skewness_beta1 = beta1_closed(alpha);
  m.kurtosis_beta2 = beta2_closed(alpha);
  return m;
}

MomentBounds moment_bounds() {
  using Functional = double (*)(double);
  struct Target {
    Functional f;
    double limit;  // value as alpha -> +-inf
  };
  const std::array<Target, 4> targets{{
      {mean_closed, 0.0},
      {variance_closed, 30.0},
      {beta1_closed, 0.0},
      {beta2_closed, 28.0 / 15.0},
  }};

  // alpha = tan(theta) maps the real line onto (-pi/2, pi/2).
  constexpr int kGrid = 40001;
  const double half_pi = std::numbers::pi / 2.0;
  std::vector<double> theta(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    theta[i] = -half_pi + std::numbers::pi * (i + 1) / (kGrid + 1);
  }

  auto extreme = [&](const Target& t, double sign) {
    // Minimizes sign * f; sign = -1 gives the maximum.
    std::vector<double> v(kGrid);
    for (int i = 0; i < kGrid; ++i) v[i] = sign * t.f(std::tan(theta[i]));
    const auto best = std::min_element(v.begin(), v.end()) - v.begin();
    double value = v[best];
    if (best > 0 && best + 1 < kGrid) {
      auto g = [&](double th) { return sign * t.f(std::tan(th)); };
      auto [th, fv] = boost::math::tools::brent_find_minima(g, theta[best - 1],
                                                            theta[best + 1], 52);
      (void)th;
      value = std::min(value, fv);
    }
    value = std::min(value, sign * t.limit);
    return sign * value;
  };

  std::array<Interval, 4> out{};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    out[i] = {extreme(targets[i], 1.0), extreme(targets[i], -1.0)};
  }
  return {out[0], out[1], out[2], out[3]};
}

MixtureDecomposition decompose(double alpha) {
  MixtureDecomposition d;
  if (std::abs(alpha) <= 1.0) {
    const double a2 = alpha * alpha;
    const double c = normalizer(alpha);
    d.symmetric_weights = {4.0 / c, 16.0 * a2 / c, 24.0 * a2 * a2 / c};
  } else {
    const double x2 = 1.0 / (alpha * alpha);
    const double w0 = 4.0 * x2 * x2;
    const double w1 = 16.0 * x2;
    const double total = w0 + w1 + 24.0;
    d.symmetric_weights = {w0 / total, w1 / total, 24.0 / total};
  }
  return d;
}

double bimodal_laplace_pdf(double z) noexcept {
  const double z2 = z * z;
  return z2 * z2 * std::exp(-std::abs(z)) / 48.0;
}

double bimodal_laplace_cdf(double z) noexcept {
  const double z2 = z * z;
  if (z < 0.0) {
    return std::exp(z) * (24.0 - 24.0 * z + 12.0 * z2 - 4.0 * z2 * z + z2 * z2) / 48.0;
  }
  return 1.0 -
         std::exp(-z) * (24.0 + 24.0 * z + 12.0 * z2 + 4.0 * z2 * z + z2 * z2) / 48.0;
}

double bimodal_laplace_mgf(double t) {
  if (!(std::abs(t) < 1.0)) {
    throw std::domain_error("bimodal_laplace_mgf: requires |t| < 1");
  }
  const double t2 = t * t;
  return (1.0 + 10.0 * t2 + 5.0 * t2 * t2) / std::pow((1.0 - t) * (1.0 + t), 5);
}

}  // namespace basla
