#include "basla/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace basla {

namespace {

double safe_eval(const Objective& f, std::span<const double> x) {
  const double v = f(x);
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

double gaussian(Pcg64& rng) {
  // Box-Muller; one of the pair is discarded.
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

double simplex_diameter(const std::vector<std::vector<double>>& vertices) {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < vertices[i].size(); ++k) {
        const double diff = vertices[i][k] - vertices[j][k];
        s += diff * diff;
      }
      d = std::max(d, std::sqrt(s));
    }
  }
  return d;
}

OptimumResult nelder_mead(const Objective& f, std::vector<double> x0,
                          std::span<const double> steps, const SimplexOptions& options) {
  const std::size_t dim = x0.size();
  if (dim == 0 || steps.size() != dim) {
    throw std::invalid_argument("nelder_mead: steps must match the dimension of x0");
  }
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> values(dim + 1);
  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return safe_eval(f, x);
  };
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  bool converged = false;

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<std::vector<double>> s2(dim + 1);
      std::vector<double> v2(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) {
        s2[i] = std::move(simplex[order[i]]);
        v2[i] = values[order[i]];
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }
    if (simplex_diameter(simplex) < options.diameter_tol) {
      converged = true;
      break;
    }
    if (evaluations >= options.max_evaluations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k] / static_cast<double>(dim);

    const auto& worst = simplex[dim];
    for (std::size_t k = 0; k < dim; ++k)
      trial[k] = centroid[k] + kReflect * (centroid[k] - worst[k]);
    const double f_reflect = eval(trial);

    if (f_reflect < values[0]) {
      for (std::size_t k = 0; k < dim; ++k)
        trial2[k] = centroid[k] + kExpand * (trial[k] - centroid[k]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[dim] = trial2;
        values[dim] = f_expand;
      } else {
        simplex[dim] = trial;
        values[dim] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[dim - 1]) {
      simplex[dim] = trial;
      values[dim] = f_reflect;
      continue;
    }
    // Contraction: outside if the reflected point beats the worst vertex.
    const bool outside = f_reflect < values[dim];
    for (std::size_t k = 0; k < dim; ++k) {
      trial2[k] = outside ? centroid[k] + kContract * (trial[k] - centroid[k])
                          : centroid[k] + kContract * (worst[k] - centroid[k]);
    }
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[dim])) {
      simplex[dim] = trial2;
      values[dim] = f_contract;
      continue;
    }
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k)
        simplex[i][k] = simplex[0][k] + kShrink * (simplex[i][k] - simplex[0][k]);
      values[i] = eval(simplex[i]);
    }
  }
  return {simplex[0], values[0], evaluations, converged};
}

OptimumResult anneal(const Objective& f, std::vector<double> x0, std::span<const double> steps,
                     const AnnealingOptions& options, Pcg64& rng) {
  const std::size_t dim = x0.size();
  if (steps.size() != dim) throw std::invalid_argument("anneal: steps must match x0");
  std::vector<double> current = x0;
  double f_current = safe_eval(f, current);
  std::vector<double> best = current;
  double f_best = f_current;
  std::size_t evaluations = 1;

  const double ratio = options.final_temperature / options.initial_temperature;
  const double n = static_cast<double>(std::max<std::size_t>(options.iterations, 2) - 1);
  std::vector<double> proposal(dim);
  for (std::size_t it = 0; it < options.iterations; ++it) {
    const double frac = static_cast<double>(it) / n;
    const double temperature = options.initial_temperature * std::pow(ratio, frac);
    // Step length shrinks with the temperature, floored at 1% of the initial.
    const double scale = std::max(0.01, std::sqrt(temperature / options.initial_temperature));
    for (std::size_t k = 0; k < dim; ++k) proposal[k] = current[k] + scale * steps[k] * gaussian(rng);
    const double f_prop = safe_eval(f, proposal);
    ++evaluations;
    const double u = rng.uniform();
    if (f_prop <= f_current || (std::isfinite(f_prop) &&
                                u < std::exp(-(f_prop - f_current) / temperature))) {
      current = proposal;
      f_current = f_prop;
      if (f_current < f_best) {
        best = current;
        f_best = f_current;
      }
    }
  }
  return {best, f_best, evaluations, true};
}

}  // namespace basla
