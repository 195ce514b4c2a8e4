#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basla/basla.hpp"
#include "basla/competitors.hpp"
#include "basla/dataset.hpp"

namespace basla {

/// 99% point of chi-square with one degree of freedom.
inline constexpr double kChiSquare1Critical99 = 6.635;

struct FitOptions {
  std::size_t restarts = 16;
  double diameter_tol = 1e-8;
  std::size_t max_evaluations = 10000;  // per start
  std::uint64_t seed = 0;
  bool annealing = false;
  bool parallel = true;
  /// Additional starting points in natural (location, scale[, shape])
  /// coordinates, tried before the generated ones.
  std::vector<std::vector<double>> extra_starts;
};

struct FitResult {
  ModelSpec spec;
  double log_likelihood;
  double aic;
  double bic;
  std::size_t n;
  std::size_t evaluations;
  bool converged;
  std::size_t restarts_used;
};

struct CompareEntry {
  Family family;
  std::optional<FitResult> fit;
  std::string error;  // set when the fit failed
};

struct LRTestResult {
  double statistic;
  std::size_t df = 1;
  double critical_99 = kChiSquare1Critical99;
  bool reject_null;
  FitResult null_fit;  // Laplace
  FitResult full_fit;  // BASLa2
};

double aic(double log_likelihood, std::size_t k) noexcept;
double bic(double log_likelihood, std::size_t k, std::size_t n) noexcept;

/// Log-likelihood of the location-scale BASLa2 model, summed with the
/// blocked OpenMP kernel.
double log_likelihood_basla(const Dataset& data, const BASLaParams& p);

/// Serial reference sum of log_pdf over the data.
double log_likelihood(const Dataset& data, const ModelSpec& spec);

/// Maximum likelihood by multi-start Nelder-Mead (optionally seeded by
/// simulated annealing) in coordinates ((mu - m0)/s0, log(scale/s0), shape).
/// Throws DataError for data without spread.
FitResult fit(const Dataset& data, Family family, const FitOptions& options = {});

/// Fits every family; successful fits sorted by AIC then BIC, failures last.
std::vector<CompareEntry> compare(const Dataset& data, std::span<const Family> families,
                                  const FitOptions& options = {});

/// Laplace (alpha = 0) against BASLa2, one degree of freedom.
LRTestResult lr_test(const Dataset& data, const FitOptions& options = {});

}  // namespace basla
