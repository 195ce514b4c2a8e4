// basla: fit, compare, test, sample and evaluate the Balakrishnan alpha skew
// Laplace family and its competitors from the command line.
//
// Exit status: 0 success, 1 internal error, 2 usage error, 3 data error,
// 4 optimizer did not converge (results are still written).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "basla/basla.hpp"
#include "basla/competitors.hpp"
#include "basla/csv.hpp"
#include "basla/extensions.hpp"
#include "basla/inference.hpp"
#include "basla/kernels.hpp"
#include "basla/quadrature.hpp"
#include "basla/report.hpp"
#include "basla/sampling.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kData = 3, kNotConverged = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataArgs {
  std::string path;
  std::string column = "1";
  std::string report;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  bool annealing = false;
};

struct EvalArgs {
  std::string family = "basla2";
  std::string function = "pdf";
  std::string grid;
  std::string out;
  double alpha = 0.0;
  double mu = 0.0;
  std::optional<double> beta;
  std::optional<double> sigma;
  double lambda = 1.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta_shape = 0.0;
};

struct SampleArgs {
  std::string family = "basla2";
  double alpha = 0.0;
  double mu = 0.0;
  double beta = 1.0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out;
};

void add_data_options(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.path, "CSV file with the observations")->required();
  cmd->add_option("--column", args.column, "1-based column index or header name");
  cmd->add_option("--report", args.report,
                  "JSON report path (default <data-stem>.<command>.json)");
  cmd->add_option("--restarts", args.restarts, "Nelder-Mead starts per family");
  cmd->add_option("--seed", args.seed, "seed for start jitter and annealing");
  cmd->add_flag("--annealing", args.annealing, "warm each start with simulated annealing");
}

basla::FitOptions fit_options(const DataArgs& args) {
  basla::FitOptions o;
  o.restarts = args.restarts;
  o.seed = args.seed;
  o.annealing = args.annealing;
  return o;
}

basla::Dataset load(const DataArgs& args) {
  return basla::ingest_csv(args.path, basla::parse_column_selector(args.column));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int emit_report(const DataArgs& args, const basla::Dataset& data,
                const basla::ReportRecord& record) {
  std::cout << basla::format_table(record);
  const std::string path =
      args.report.empty() ? data.name() + "." + record.command + ".json" : args.report;
  write_text(path, basla::to_json(record));
  const bool all_converged = std::all_of(record.rows.begin(), record.rows.end(),
                                         [](const basla::ReportRow& r) { return r.converged; });
  return all_converged ? kOk : kNotConverged;
}

basla::Family require_family(const std::string& id) {
  const auto f = basla::parse_family(id);
  if (!f) throw UsageError("unknown family '" + id + "'");
  return *f;
}

std::vector<double> parse_grid(const std::string& text) {
  std::array<double, 3> parts{};
  std::stringstream ss(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(ss, item, ':')) {
    if (count == 3) throw UsageError("grid must be lo:hi:step");
    try {
      std::size_t used = 0;
      parts[count] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad grid component '" + item + "'");
    }
    ++count;
  }
  const auto [lo, hi, step] = parts;
  if (count != 3 || !(step > 0.0) || !(hi >= lo)) {
    throw UsageError("grid must be lo:hi:step with lo <= hi and step > 0");
  }
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (n > 50'000'000) throw UsageError("grid too large");
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = lo + step * static_cast<double>(i);
  return z;
}

int run_fit(const DataArgs& args, const std::string& family_id) {
  const auto family = require_family(family_id);
  const auto data = load(args);
  const auto result = basla::fit(data, family, fit_options(args));
  return emit_report(args, data, basla::make_fit_report(data, result));
}

int run_compare(const DataArgs& args, const std::vector<std::string>& family_ids) {
  std::vector<basla::Family> families;
  if (family_ids.empty()) {
    families.assign(basla::kAllFamilies.begin(), basla::kAllFamilies.end());
  } else {
    for (const auto& id : family_ids) families.push_back(require_family(id));
  }
  if (families.size() < 2) throw UsageError("compare needs at least two families");
  const auto data = load(args);
  const auto entries = basla::compare(data, families, fit_options(args));
  return emit_report(args, data, basla::make_compare_report(data, entries));
}

int run_lrt(const DataArgs& args) {
  const auto data = load(args);
  const auto lr = basla::lr_test(data, fit_options(args));
  return emit_report(args, data, basla::make_lr_report(data, lr));
}

int run_sample(const SampleArgs& args) {
  if (require_family(args.family) != basla::Family::BASLa2) {
    throw UsageError("sampling is available for basla2 only");
  }
  if (args.n == 0) throw UsageError("--n must be >= 1");
  const basla::BASLaParams p(args.alpha, args.mu, args.beta);
  const auto draws = basla::sample(p, args.n, {args.seed, args.stream});
  std::string text;
  text.reserve(draws.size() * 22);
  for (double v : draws) text += fmt::format("{}\n", v);
  write_text(args.out, text);
  return kOk;
}

int run_eval(const EvalArgs& args) {
  const auto grid = parse_grid(args.grid);
  if (args.function != "pdf" && args.function != "cdf") {
    throw UsageError("--function must be pdf or cdf");
  }
  const bool want_cdf = args.function == "cdf";
  std::vector<double> values(grid.size());
  std::vector<std::string> notes;

  std::optional<basla::ExtensionParams> extension;
  if (args.family == "two-param") extension = basla::TwoParam{args.alpha1, args.alpha2};
  if (args.family == "alpha-beta") extension = basla::AlphaBeta{args.alpha, args.beta_shape};
  if (args.family == "generalized") extension = basla::Generalized{args.alpha, args.lambda};
  if (args.family == "log-basla2") extension = basla::LogFamily{args.alpha};

  std::function<double(double)> density;
  std::optional<basla::ExtensionDensity> ext_density;
  double kink = 0.0;
  if (extension) {
    ext_density.emplace(*extension);
    if (auto note = ext_density->override_note(); !note.empty()) notes.push_back(note);
    const bool log_family = std::holds_alternative<basla::LogFamily>(*extension);
    density = [&, log_family](double z) {
      if (log_family && !(z > 0.0)) return 0.0;
      return ext_density->pdf(z);
    };
    if (want_cdf && log_family) {
      // F(z) = P(Y <= log z) with Y standard BASLa2.
      const basla::BASLaParams p(args.alpha);
      basla::kernels::map_parallel(grid, values, [&](double z) {
        return z > 0.0 ? basla::cdf(std::log(z), p) : 0.0;
      });
      density = nullptr;
    }
  } else {
    const auto family = require_family(args.family);
    const auto names = basla::parameter_names(family);
    const double scale = names.scale == "sigma" ? args.sigma.value_or(args.beta.value_or(1.0))
                                                : args.beta.value_or(args.sigma.value_or(1.0));
    std::vector<double> params{args.mu, scale};
    if (names.shape == "alpha") params.push_back(args.alpha);
    if (names.shape == "lambda") params.push_back(args.lambda);
    const basla::ModelSpec spec(family, params);
    kink = args.mu;
    if (family == basla::Family::BASLa2) {
      const basla::BASLaParams p(args.alpha, args.mu, scale);
      basla::kernels::map_parallel(grid, values, [&](double z) {
        return want_cdf ? basla::cdf(z, p) : basla::pdf(z, p);
      });
    } else {
      density = [spec](double z) { return std::exp(basla::log_pdf(spec, z)); };
    }
  }

  if (density) {
    if (want_cdf) {
      // No closed form: integrate the density up to each grid point.
      basla::QuadratureOptions opts;
      opts.rel_tol = 1e-12;
      const std::array<double, 2> kinks{0.0, kink};
      const double lower =
          extension && std::holds_alternative<basla::LogFamily>(*extension)
              ? 0.0
              : -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = grid[i] <= lower ? 0.0
                                     : basla::integrate_oracle(density, lower, grid[i], kinks, opts);
      }
    } else {
      basla::kernels::map_serial(grid, values, density);
    }
  }

  std::string text;
  text.reserve(grid.size() * 40);
  for (std::size_t i = 0; i < grid.size(); ++i) text += fmt::format("{},{}\n", grid[i], values[i]);
  write_text(args.out, text);
  for (const auto& note : notes) std::cerr << "normalizer: " << note << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balakrishnan alpha skew Laplace toolkit"};
  app.require_subcommand(1);

  DataArgs fit_args, compare_args, lrt_args;
  std::string fit_family;
  std::vector<std::string> compare_families;
  auto* fit_cmd = app.add_subcommand("fit", "maximum likelihood fit of one family");
  fit_cmd->add_option("--family", fit_family, "family id")->required();
  add_data_options(fit_cmd, fit_args);

  auto* compare_cmd = app.add_subcommand("compare", "fit several families, rank by AIC");
  compare_cmd->add_option("--families", compare_families, "family ids (default: all ten)")
      ->delimiter(',');
  add_data_options(compare_cmd, compare_args);

  auto* lrt_cmd = app.add_subcommand("lrt", "likelihood-ratio test, Laplace vs basla2");
  add_data_options(lrt_cmd, lrt_args);

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "draw variates by acceptance-rejection");
  sample_cmd->add_option("--family", sample_args.family, "family id (basla2)");
  sample_cmd->add_option("--alpha", sample_args.alpha, "skewness");
  sample_cmd->add_option("--mu", sample_args.mu, "location");
  sample_cmd->add_option("--beta", sample_args.beta, "scale");
  sample_cmd->add_option("--n", sample_args.n, "number of draws");
  sample_cmd->add_option("--seed", sample_args.seed, "generator seed");
  sample_cmd->add_option("--stream", sample_args.stream, "generator stream id");
  sample_cmd->add_option("--out", sample_args.out, "output file (default stdout)");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "pdf or cdf on a grid, as z,value CSV");
  eval_cmd->add_option("--family", eval_args.family,
                       "family id, or two-param | alpha-beta | generalized | log-basla2");
  eval_cmd->add_option("--function", eval_args.function, "pdf or cdf");
  eval_cmd->add_option("--grid", eval_args.grid, "lo:hi:step")->required();
  eval_cmd->add_option("--out", eval_args.out, "output file (default stdout)");
  eval_cmd->add_option("--alpha", eval_args.alpha, "skewness / alpha-type shape");
  eval_cmd->add_option("--mu", eval_args.mu, "location");
  eval_cmd->add_option("--beta", eval_args.beta, "scale");
  eval_cmd->add_option("--sigma", eval_args.sigma, "scale of normal-based families");
  eval_cmd->add_option("--lambda", eval_args.lambda, "lambda-type shape");
  eval_cmd->add_option("--alpha1", eval_args.alpha1, "two-param: first skewness");
  eval_cmd->add_option("--alpha2", eval_args.alpha2, "two-param: second skewness");
  eval_cmd->add_option("--beta-shape", eval_args.beta_shape, "alpha-beta: cubic coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fit_cmd) return run_fit(fit_args, fit_family);
    if (*compare_cmd) return run_compare(compare_args, compare_families);
    if (*lrt_cmd) return run_lrt(lrt_args);
    if (*sample_cmd) return run_sample(sample_args);
    if (*eval_cmd) return run_eval(eval_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const basla::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
