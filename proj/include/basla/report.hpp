#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "basla/dataset.hpp"
#include "basla/inference.hpp"

namespace basla {

struct ReportRow {
  std::string family;
  std::vector<std::pair<std::string, double>> estimates;  // by parameter name
  std::size_t k;
  double log_likelihood;
  double aic;
  double bic;
  bool converged;
  std::size_t evaluations;
};

struct LrSummary {
  double statistic;
  std::size_t df;
  double critical_99;
  bool reject_null;
};

/// One run's results laid out like the comparison tables: rows sorted by AIC
/// (then BIC), failed fits listed separately.
struct ReportRecord {
  std::string command;
  std::string dataset_name;
  std::size_t n = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> failures;
  std::vector<std::string> normalizer_overrides;
  std::optional<LrSummary> lr_test;
};

ReportRow make_row(const FitResult& fit);

ReportRecord make_fit_report(const Dataset& data, const FitResult& fit);
ReportRecord make_compare_report(const Dataset& data, std::span<const CompareEntry> entries);
ReportRecord make_lr_report(const Dataset& data, const LRTestResult& lr);

std::string to_json(const ReportRecord& record);

/// Fixed-width table with columns mu, sigma, lambda, alpha, beta, logL, AIC, BIC.
std::string format_table(const ReportRecord& record);

}  // namespace basla
