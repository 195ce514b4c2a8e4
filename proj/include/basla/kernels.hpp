#pragma once

// Data-parallel loops used by the likelihood and grid evaluators. Each
// kernel has a plain serial reference next to its OpenMP version; the tests
// hold the two against each other and basla_bench times them.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "basla/competitors.hpp"

namespace basla::kernels {

/// Reduction block size. Partial sums are formed per block and combined in
/// block order, so the parallel result does not depend on the thread count.
inline constexpr std::size_t kBlock = 1024;

template <class F>
double sum_serial(std::span<const double> xs, F&& f) {
  double s = 0.0;
  for (double x : xs) s += f(x);
  return s;
}

template <class F>
double sum_parallel(std::span<const double> xs, F&& f) {
  const std::size_t n = xs.size();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(xs[i]);
    partial[static_cast<std::size_t>(b)] = s;
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

template <class F>
void map_serial(std::span<const double> in, std::span<double> out, F&& f) {
  if (in.size() != out.size()) throw std::invalid_argument("map_serial: size mismatch");
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
}

template <class F>
void map_parallel(std::span<const double> in, std::span<double> out, F&& f) {
  if (in.size() != out.size()) throw std::invalid_argument("map_parallel: size mismatch");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(in.size()); ++i) {
    out[static_cast<std::size_t>(i)] = f(in[static_cast<std::size_t>(i)]);
  }
}

inline double log_likelihood_serial(Family f, std::span<const double> params,
                                    std::span<const double> data) {
  return sum_serial(data, [&](double z) { return log_density(f, params, z); });
}

inline double log_likelihood_parallel(Family f, std::span<const double> params,
                                      std::span<const double> data) {
  return sum_parallel(data, [&](double z) { return log_density(f, params, z); });
}

}  // namespace basla::kernels
