#pragma once

#include <functional>
#include <span>

namespace basla {

struct KsResult {
  double statistic;  // sup |F_n - F|
  double p_value;    // asymptotic, with Stephens' finite-n correction
};

/// One-sample Kolmogorov-Smirnov test against a continuous cdf.
KsResult ks_test(std::span<const double> sample, const std::function<double(double)>& cdf);

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

struct SampleMoments {
  double mean;
  double variance;  // unbiased
};

SampleMoments sample_moments(std::span<const double> xs);

}  // namespace basla
