#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "basla/basla.hpp"
#include "basla/rng.hpp"

namespace basla {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

struct RejectionStats {
  std::size_t proposals = 0;
  std::size_t accepted = 0;

  double acceptance_rate() const {
    return proposals == 0 ? 0.0 : static_cast<double>(accepted) / proposals;
  }
};

struct SampleBatch {
  std::vector<double> values;
  RejectionStats stats;
};

/// sup_z h(z) / h1(z) where h is the skewed density and h1 its symmetric
/// component. Independent of alpha.
inline constexpr double kEnvelopeConstant = 1.9428090415820634;  // (3 + 2 sqrt 2) / 3

/// Symmetric-component density f1(z; alpha), standard form.
double symmetric_component_pdf(double z, double alpha);

/// h(z) / h1(z) in standard form; both densities share C2(alpha) so it is
/// (1 - alpha z)^2 + 1 squared over 4 + 8 (alpha z)^2 + (alpha z)^4.
double envelope_ratio(double z, double alpha);

/// Gamma(shape, 1) variate for integer shape, as a sum of exponentials.
double gamma_integer(Pcg64& rng, int shape);

/// One draw from the symmetric component: mixture of double-sided gammas
/// with shapes 1, 3, 5 weighted by decompose(alpha).
double draw_symmetric(Pcg64& rng, const MixtureDecomposition& mix);

std::vector<double> sample_symmetric(double alpha, std::size_t n, const SamplerConfig& cfg);

/// Acceptance-rejection draws from BASLa2(alpha, mu, beta).
SampleBatch sample_with_stats(const BASLaParams& p, std::size_t n, const SamplerConfig& cfg);

std::vector<double> sample(const BASLaParams& p, std::size_t n, const SamplerConfig& cfg);

struct EnvelopeCheck {
  bool ok = true;
  double sup_ratio = 0.0;
  double sup_at = 0.0;
  bool attains_bound = false;  // grid sup within 1e-3 of kEnvelopeConstant
  std::optional<double> violation_z;
};

/// Grid check of h(z) <= T h1(z) on [-50, 50] at 10^4 points.
EnvelopeCheck verify_envelope(double alpha);

}  // namespace basla
