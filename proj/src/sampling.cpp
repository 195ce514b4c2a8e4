#include "basla/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace basla {

double symmetric_component_pdf(double z, double alpha) {
  const double u2 = alpha * alpha * z * z;
  return (4.0 + 8.0 * u2 + u2 * u2) / normalizer(alpha) * 0.5 * std::exp(-std::abs(z));
}

double envelope_ratio(double z, double alpha) {
  const double u = alpha * z;
  const double d = 1.0 - u;
  const double q = d * d + 1.0;
  const double u2 = u * u;
  return q * q / (4.0 + 8.0 * u2 + u2 * u2);
}

double gamma_integer(Pcg64& rng, int shape) {
  double g = 0.0;
  for (int i = 0; i < shape; ++i) g -= std::log1p(-rng.uniform());
  return g;
}

double draw_symmetric(Pcg64& rng, const MixtureDecomposition& mix) {
  const double pick = rng.uniform();
  const auto& w = mix.symmetric_weights;
  int component = 2;
  if (pick < w[0]) {
    component = 0;
  } else if (pick < w[0] + w[1]) {
    component = 1;
  }
  const double magnitude = gamma_integer(rng, mix.component_shapes[component]);
  return (rng() >> 63) ? -magnitude : magnitude;
}

std::vector<double> sample_symmetric(double alpha, std::size_t n, const SamplerConfig& cfg) {
  if (n == 0) throw std::invalid_argument("sample_symmetric: n must be >= 1");
  Pcg64 rng(cfg.seed, cfg.stream_id);
  const auto mix = decompose(alpha);
  std::vector<double> out(n);
  for (auto& v : out) v = draw_symmetric(rng, mix);
  return out;
}

SampleBatch sample_with_stats(const BASLaParams& p, std::size_t n, const SamplerConfig& cfg) {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  Pcg64 rng(cfg.seed, cfg.stream_id);
  const auto mix = decompose(p.alpha());
  SampleBatch batch;
  batch.values.reserve(n);
  while (batch.values.size() < n) {
    const double proposal = draw_symmetric(rng, mix);
    const double u = rng.uniform();
    ++batch.stats.proposals;
    if (u < envelope_ratio(proposal, p.alpha()) / kEnvelopeConstant) {
      ++batch.stats.accepted;
      batch.values.push_back(p.mu() + p.beta() * proposal);
    }
  }
  return batch;
}

std::vector<double> sample(const BASLaParams& p, std::size_t n, const SamplerConfig& cfg) {
  return sample_with_stats(p, n, cfg).values;
}

EnvelopeCheck verify_envelope(double alpha) {
  constexpr int kPoints = 10000;
  constexpr double kLo = -50.0;
  constexpr double kHi = 50.0;
  EnvelopeCheck check;
  for (int i = 0; i < kPoints; ++i) {
    const double z = kLo + (kHi - kLo) * i / (kPoints - 1);
    const double r = envelope_ratio(z, alpha);
    if (r > check.sup_ratio) {
      check.sup_ratio = r;
      check.sup_at = z;
    }
    if (r > kEnvelopeConstant + 1e-12 && !check.violation_z) {
      check.ok = false;
      check.violation_z = z;
    }
  }
  check.attains_bound = std::abs(check.sup_ratio - kEnvelopeConstant) < 1e-3;
  return check;
}

}  // namespace basla
