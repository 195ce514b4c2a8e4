#include "basla/report.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "json.hpp"

namespace basla {

namespace {

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.aic != b.aic) return a.aic < b.aic;
    return a.bic < b.bic;
  });
}

}  // namespace

ReportRow make_row(const FitResult& fit) {
  const auto names = parameter_names(fit.spec.family());
  ReportRow row;
  row.family = std::string(family_id(fit.spec.family()));
  row.estimates.emplace_back(std::string(names.location), fit.spec.location());
  row.estimates.emplace_back(std::string(names.scale), fit.spec.scale());
  if (fit.spec.k() > 2) row.estimates.emplace_back(std::string(names.shape), fit.spec.shape());
  row.k = fit.spec.k();
  row.log_likelihood = fit.log_likelihood;
  row.aic = fit.aic;
  row.bic = fit.bic;
  row.converged = fit.converged;
  row.evaluations = fit.evaluations;
  return row;
}

ReportRecord make_fit_report(const Dataset& data, const FitResult& fit) {
  ReportRecord r;
  r.command = "fit";
  r.dataset_name = data.name();
  r.n = data.size();
  r.rows.push_back(make_row(fit));
  return r;
}

ReportRecord make_compare_report(const Dataset& data, std::span<const CompareEntry> entries) {
  ReportRecord r;
  r.command = "compare";
  r.dataset_name = data.name();
  r.n = data.size();
  for (const auto& e : entries) {
    if (e.fit) {
      r.rows.push_back(make_row(*e.fit));
    } else {
      r.failures.push_back(std::string(family_id(e.family)) + ": " + e.error);
    }
  }
  sort_rows(r.rows);
  return r;
}

ReportRecord make_lr_report(const Dataset& data, const LRTestResult& lr) {
  ReportRecord r;
  r.command = "lrt";
  r.dataset_name = data.name();
  r.n = data.size();
  r.rows.push_back(make_row(lr.full_fit));
  r.rows.push_back(make_row(lr.null_fit));
  sort_rows(r.rows);
  r.lr_test = LrSummary{lr.statistic, lr.df, lr.critical_99, lr.reject_null};
  return r;
}

std::string to_json(const ReportRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["dataset"] = record.dataset_name;
  j["n"] = record.n;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json jr;
    jr["family"] = row.family;
    jr["k"] = row.k;
    nlohmann::ordered_json est;
    for (const auto& [name, value] : row.estimates) est[name] = value;
    jr["estimates"] = est;
    jr["log_likelihood"] = row.log_likelihood;
    jr["aic"] = row.aic;
    jr["bic"] = row.bic;
    jr["converged"] = row.converged;
    jr["evaluations"] = row.evaluations;
    j["rows"].push_back(jr);
  }
  j["failures"] = record.failures;
  j["normalizer_overrides"] = record.normalizer_overrides;
  if (record.lr_test) {
    j["lr_test"] = {{"statistic", record.lr_test->statistic},
                    {"df", record.lr_test->df},
                    {"critical_99", record.lr_test->critical_99},
                    {"reject_null", record.lr_test->reject_null}};
  }
  return j.dump(2) + "\n";
}

std::string format_table(const ReportRecord& record) {
  constexpr std::array<std::string_view, 5> kColumns{"mu", "sigma", "lambda", "alpha", "beta"};
  std::string out = fmt::format("Dataset: {} (n = {})\n", record.dataset_name, record.n);
  out += fmt::format("{:<20}", "Distribution");
  for (auto c : kColumns) out += fmt::format("{:>10}", c);
  out += fmt::format("{:>12}{:>12}{:>12}\n", "logL", "AIC", "BIC");
  for (const auto& row : record.rows) {
    out += fmt::format("{:<20}", row.family + (row.converged ? "" : "*"));
    for (auto c : kColumns) {
      const auto it = std::find_if(row.estimates.begin(), row.estimates.end(),
                                   [&](const auto& e) { return e.first == c; });
      out += it == row.estimates.end() ? fmt::format("{:>10}", "--")
                                       : fmt::format("{:>10.3f}", it->second);
    }
    out += fmt::format("{:>12.3f}{:>12.3f}{:>12.3f}\n", row.log_likelihood, row.aic, row.bic);
  }
  for (const auto& f : record.failures) out += "failed: " + f + "\n";
  for (const auto& note : record.normalizer_overrides) out += "normalizer: " + note + "\n";
  if (record.lr_test) {
    out += fmt::format("LR statistic {:.3f} (df {}), 99% critical value {:.3f}: {}\n",
                       record.lr_test->statistic, record.lr_test->df,
                       record.lr_test->critical_99,
                       record.lr_test->reject_null ? "reject Laplace" : "retain Laplace");
  }
  if (std::any_of(record.rows.begin(), record.rows.end(),
                  [](const ReportRow& r) { return !r.converged; })) {
    out += "* optimizer did not meet the simplex tolerance\n";
  }
  return out;
}

}  // namespace basla
