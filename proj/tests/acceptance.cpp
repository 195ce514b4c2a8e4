// Acceptance gate: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "basla/basla.hpp"
#include "basla/csv.hpp"
#include "basla/extensions.hpp"
#include "basla/inference.hpp"
#include "basla/quadrature.hpp"
#include "basla/rng.hpp"
#include "basla/sampling.hpp"
#include "basla/stats.hpp"

using namespace basla;
namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<double, 7> kAlphaGrid{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
const std::array<double, 1> kOrigin{0.0};
const std::array<double, 7> kWide{-400.0, -100.0, -25.0, 0.0, 25.0, 100.0, 400.0};

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status;
  std::string detail;
};

QuadratureOptions relative(double tol) {
  QuadratureOptions o;
  o.rel_tol = tol;
  return o;
}

// Relative error, absolute near zero.
double deviation(double value, double ref) {
  const double scale = std::abs(ref) < 1e-12 ? 1.0 : std::abs(ref);
  return std::abs(value - ref) / scale;
}

double weighted(double alpha, const std::function<double(double)>& g) {
  const BASLaParams p(alpha);
  auto f = [&](double z) {
    const double d = pdf(z, p);
    return d == 0.0 ? 0.0 : g(z) * d;
  };
  return integrate_oracle(f, -kInf, kInf, kWide, relative(1e-12));
}

std::vector<double> uniform_points(std::uint64_t seed, double lo, double hi) {
  Pcg64 rng(seed, 0);
  std::vector<double> zs(1000);
  for (auto& z : zs) z = lo + (hi - lo) * rng.uniform();
  return zs;
}

Outcome normalization() {
  double worst = 0.0;
  std::string where;
  auto note = [&](double mass, const std::string& label) {
    const double e = std::abs(mass - 1.0);
    if (e > worst) {
      worst = e;
      where = label;
    }
  };
  std::vector<double> alphas{0.0};
  for (int i = 0; i < 100; ++i) {
    const double magnitude = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
    alphas.push_back(i % 2 == 0 ? magnitude : -magnitude);
  }
  for (double a : alphas) note(weighted(a, [](double) { return 1.0; }), fmt::format("basla2 {}", a));

  const std::vector<ExtensionParams> grid{
      TwoParam{0.0, 0.0},     TwoParam{1.0, 1.0},     TwoParam{-0.5, 2.0},
      TwoParam{3.0, -0.2},    TwoParam{0.1, 0.0},     AlphaBeta{0.0, 0.0},
      AlphaBeta{0.0, 1.0},    AlphaBeta{1.0, 0.5},    AlphaBeta{-2.0, 0.01},
      AlphaBeta{0.5, -3.0},   Generalized{0.0, 1.0},  Generalized{1.0, 1.0},
      Generalized{-0.7, 3.0}, Generalized{2.0, -0.5}, Generalized{0.3, 25.0},
      LogFamily{0.0},         LogFamily{1.0},         LogFamily{-2.0},
      LogFamily{0.4},         LogFamily{10.0},
  };
  int overrides = 0;
  for (const auto& params : grid) {
    const ExtensionDensity d(params);
    overrides += d.normalizer().overridden;
    double mass = 0.0;
    if (std::holds_alternative<LogFamily>(params)) {
      auto f = [&](double y) {
        const double z = std::exp(y);
        return z > 0.0 && std::isfinite(z) ? d.pdf(z) * z : 0.0;
      };
      mass = integrate_oracle(f, -kInf, kInf, kOrigin, relative(1e-12));
    } else {
      mass = integrate_oracle([&](double z) { return d.pdf(z); }, -kInf, kInf, kOrigin,
                              relative(1e-12));
    }
    note(mass, extension_name(params));
  }
  const std::size_t total = alphas.size() + grid.size();
  return {worst <= 1e-8 ? Status::Pass : Status::Fail,
          fmt::format("{} densities, max |mass - 1| = {:.2e} ({}), {} closed-form constants replaced",
                      total, worst, where, overrides)};
}

Outcome closed_forms() {
  double worst_cdf = 0.0;
  double worst_mgf = 0.0;
  double worst_moment = 0.0;
  for (double a : kAlphaGrid) {
    const BASLaParams p(a);
    for (double z : {-6.0, -2.0, -0.5, 0.0, 0.5, 2.0, 6.0}) {
      const double ref =
          integrate_oracle([&](double x) { return pdf(x, p); }, -kInf, z, kOrigin, relative(1e-12));
      worst_cdf = std::max(worst_cdf, deviation(cdf(z, p), ref));
    }
    for (double t : {-0.9, -0.5, 0.5, 0.9}) {
      worst_mgf = std::max(worst_mgf,
                           deviation(mgf(t, a), weighted(a, [t](double z) { return std::exp(t * z); })));
    }
    for (unsigned r = 1; r <= 4; ++r) {
      const double ref = weighted(a, [r](double z) { return std::pow(z, r); });
      worst_moment = std::max(worst_moment, deviation(raw_moment(r, a), ref));
    }
  }
  const bool ok = worst_cdf <= 1e-6 && worst_mgf <= 1e-6 && worst_moment <= 1e-6;
  return {ok ? Status::Pass : Status::Fail,
          fmt::format("7 alphas; max rel err cdf {:.1e}, mgf {:.1e}, moments 1-4 {:.1e}", worst_cdf,
                      worst_mgf, worst_moment)};
}

Outcome bounds() {
  const auto b = moment_bounds();
  struct Item {
    const char* name;
    double got;
    double want;
  };
  const std::array<Item, 8> items{{
      {"mean min", b.mean.lo, -2.58345},
      {"mean max", b.mean.hi, 2.58345},
      {"variance min", b.variance.lo, 2.0},
      {"variance max", b.variance.hi, 30.0},
      {"beta1 max", b.skewness_beta1.hi, 1.14182},
      {"beta2 min", b.kurtosis_beta2.lo, 1.86667},
      {"beta2 max", b.kurtosis_beta2.hi, 6.49587},
      {"beta1 min", b.skewness_beta1.lo, 0.0},
  }};
  double worst = 0.0;
  for (const auto& it : items) worst = std::max(worst, std::abs(it.got - it.want));
  return {worst <= 1e-3 ? Status::Pass : Status::Fail,
          fmt::format("mean [{:.5f}, {:.5f}], variance [{:.5f}, {:.5f}], beta1 max {:.5f}, "
                      "beta2 [{:.5f}, {:.5f}]; max deviation {:.1e}",
                      b.mean.lo, b.mean.hi, b.variance.lo, b.variance.hi, b.skewness_beta1.hi,
                      b.kurtosis_beta2.lo, b.kurtosis_beta2.hi, worst)};
}

Outcome limit_law() {
  double sup_pdf = 0.0;
  double sup_cdf = 0.0;
  double worst_mgf = 0.0;
  for (double a : {1e3, -1e3}) {
    const BASLaParams p(a);
    for (int i = 0; i <= 40000; ++i) {
      const double z = -20.0 + 40.0 * i / 40000.0;
      sup_pdf = std::max(sup_pdf, std::abs(pdf(z, p) - bimodal_laplace_pdf(z)));
      sup_cdf = std::max(sup_cdf, std::abs(cdf(z, p) - bimodal_laplace_cdf(z)));
    }
    for (double t : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      worst_mgf = std::max(worst_mgf, deviation(mgf(t, a), bimodal_laplace_mgf(t)));
    }
  }
  const bool ok = sup_pdf <= 1e-3 && sup_cdf <= 1e-3 && worst_mgf <= 1e-3;
  return {ok ? Status::Pass : Status::Fail,
          fmt::format("alpha = +-1e3 on [-20, 20]: sup pdf {:.1e}, sup cdf {:.1e}, mgf rel {:.1e}",
                      sup_pdf, sup_cdf, worst_mgf)};
}

Outcome sampler() {
  constexpr std::size_t kDraws = 100000;
  bool ok = true;
  std::string detail;
  std::uint64_t stream = 0;
  for (double a : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    const BASLaParams p(a);
    const auto batch = sample_with_stats(p, kDraws, {20240601, stream++});
    const auto ks = ks_test(batch.values, [&](double z) { return cdf(z, p); });
    const double rate = batch.stats.acceptance_rate();
    const auto m = moment_summary(a);
    const auto s = sample_moments(batch.values);
    const double mu4 = raw_moment(4, a) - 4 * m.mean * raw_moment(3, a) +
                       6 * m.mean * m.mean * raw_moment(2, a) - 3 * std::pow(m.mean, 4);
    const double z_mean = std::abs(s.mean - m.mean) / std::sqrt(m.variance / kDraws);
    const double z_var =
        std::abs(s.variance - m.variance) / std::sqrt((mu4 - m.variance * m.variance) / kDraws);
    const bool this_ok = ks.p_value > 0.01 && std::abs(rate - 1.0 / kEnvelopeConstant) <= 0.01 &&
                         z_mean < 4.0 && z_var < 4.0;
    ok = ok && this_ok;
    detail += fmt::format("{}alpha {}: KS p {:.3f}, accept {:.4f}, mean {:.1f} SE, var {:.1f} SE",
                          detail.empty() ? "" : "; ", a, ks.p_value, rate, z_mean, z_var);
  }
  return {ok ? Status::Pass : Status::Fail, detail};
}

Outcome round_trip() {
  constexpr int kReps = 20;
  std::vector<double> ea;
  std::vector<double> em;
  std::vector<double> eb;
  int nested = 0;
  for (int rep = 0; rep < kReps; ++rep) {
    const Dataset d("replicate", sample(BASLaParams(1.0, 0.0, 1.0), 5000,
                                        {1000 + static_cast<std::uint64_t>(rep), 0}));
    const auto full = fit(d, Family::BASLa2);
    const auto null = fit(d, Family::Laplace);
    ea.push_back(std::abs(full.spec.shape() - 1.0));
    em.push_back(std::abs(full.spec.location()));
    eb.push_back(std::abs(full.spec.scale() - 1.0));
    nested += full.log_likelihood >= null.log_likelihood;
  }
  const double ma = median(ea);
  const double mm = median(em);
  const double mb = median(eb);
  const bool ok = ma <= 0.15 && mm <= 0.15 && mb <= 0.1 && nested == kReps;
  return {ok ? Status::Pass : Status::Fail,
          fmt::format("{} x 5000 draws: median |err| alpha {:.4f}, mu {:.4f}, beta {:.4f}; "
                      "nesting held in {}/{}",
                      kReps, ma, mm, mb, nested, kReps)};
}

Dataset load(const fs::path& path, const std::string& column) {
  if (column != "auto") return ingest_csv(path, parse_column_selector(column));
  try {
    return ingest_csv(path, std::size_t{5});
  } catch (const CsvError& e) {
    if (e.kind() != CsvError::Kind::MissingColumn) throw;
    return ingest_csv(path, std::size_t{1});
  }
}

Outcome tables(const fs::path& dir, const std::string& lakes_column,
               const std::string& rates_column) {
  const fs::path lakes = dir / "lakes.csv";
  const fs::path rates = dir / "gbpusd.csv";
  if (!fs::exists(lakes) || !fs::exists(rates)) {
    return {Status::Skip, fmt::format("datasets not found ({} and {} are required)",
                                      lakes.string(), rates.string())};
  }
  const auto d1 = load(lakes, lakes_column);
  const auto d2 = load(rates, rates_column);
  const auto lr1 = lr_test(d1);
  const auto lr2 = lr_test(d2);
  const auto& f1 = lr1.full_fit;
  const auto& f2 = lr2.full_fit;
  const bool ok = std::abs(f1.log_likelihood + 232.138) <= 0.5 && std::abs(f1.aic - 470.277) <= 1.0 &&
                  std::abs(f2.log_likelihood + 296.849) <= 0.5 &&
                  std::abs(lr1.statistic - 14.22) <= 0.5 && std::abs(lr2.statistic - 84.932) <= 0.5 &&
                  lr1.reject_null && lr2.reject_null;
  return {ok ? Status::Pass : Status::Fail,
          fmt::format("lakes n={}: logL {:.3f}, AIC {:.3f}, LR {:.3f}; gbpusd n={}: logL {:.3f}, "
                      "LR {:.3f}",
                      d1.size(), f1.log_likelihood, f1.aic, lr1.statistic, d2.size(),
                      f2.log_likelihood, lr2.statistic)};
}

Outcome properties() {
  double worst = 0.0;
  auto track = [&](double a, double b) {
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
  };
  double worst_cdf = 0.0;
  const auto zs = uniform_points(8, -20.0, 20.0);
  for (double z : zs) track(pdf(z, BASLaParams(0.0)), 0.5 * std::exp(-std::abs(z)));
  for (double a : {-1.7, 0.4, 3.0}) {
    const BASLaParams p(a);
    const BASLaParams q(-a);
    const ExtensionDensity two(TwoParam{a, 0.0});
    const ExtensionDensity ab(AlphaBeta{a, 0.0});
    for (double z : zs) {
      track(pdf(z, p), pdf(-z, q));
      worst_cdf = std::max(worst_cdf, std::abs(cdf(-z, q) - (1.0 - cdf(z, p))));
      track(two.pdf(z), pdf(z, p));
      track(ab.pdf(z), pdf(z, p));
    }
  }
  const ExtensionDensity lf(LogFamily{1.3});
  const ExtensionDensity lf_r(LogFamily{-1.3});
  for (double y : uniform_points(9, -10.0, 10.0)) {
    const double z = std::exp(y);
    track(lf.pdf(z), lf_r.pdf(1.0 / z) / (z * z));
  }
  return {worst <= 1e-10 && worst_cdf <= 1e-12 ? Status::Pass : Status::Fail,
          fmt::format("Laplace collapse, reflection, alpha2 = 0 and beta = 0 reductions, "
                      "reciprocal law at 1000 points each; max rel diff {:.1e}, cdf {:.1e}",
                      worst, worst_cdf)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string data_dir = "data";
  std::string lakes_column = "auto";
  std::string rates_column = "1";
  app.add_option("--data-dir", data_dir, "directory holding lakes.csv and gbpusd.csv");
  app.add_option("--lakes-column", lakes_column, "column of lakes.csv (auto: 5, else 1)");
  app.add_option("--rates-column", rates_column, "column of gbpusd.csv");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "normalization", 10.0, normalization},
      {2, "closed forms vs quadrature", 0.0, closed_forms},
      {3, "moment bounds", 30.0, bounds},
      {4, "bimodal Laplace limit", 0.0, limit_law},
      {5, "sampler", 60.0, sampler},
      {6, "estimator round trip", 0.0, round_trip},
      {7, "dataset tables", 0.0, [&] { return tables(data_dir, lakes_column, rates_column); }},
      {8, "reductions and reflections", 0.0, properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {Status::Fail, fmt::format("error: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.status == Status::Pass && c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      out.status = Status::Fail;
      out.detail += fmt::format("; exceeded {:.0f} s budget", c.budget_seconds);
    }
    const char* tag = out.status == Status::Pass ? "PASS" : out.status == Status::Fail ? "FAIL" : "SKIP";
    failures += out.status == Status::Fail;
    fmt::print("criterion {} {:<28} {} ({:.2f} s): {}\n", c.id, c.name, tag, secs, out.detail);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
