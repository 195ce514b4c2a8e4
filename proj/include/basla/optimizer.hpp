#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "basla/rng.hpp"

namespace basla {

/// Minimization target. Infeasible points return +inf.
using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  double diameter_tol = 1e-8;
  std::size_t max_evaluations = 10000;
};

struct OptimumResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
  bool converged;
};

/// Nelder-Mead downhill simplex. The initial simplex is x0 plus one vertex
/// per coordinate displaced by steps[i]. Stops when the largest vertex
/// distance falls below diameter_tol or the evaluation budget is spent.
OptimumResult nelder_mead(const Objective& f, std::vector<double> x0,
                          std::span<const double> steps, const SimplexOptions& options = {});

struct AnnealingOptions {
  std::size_t iterations = 4000;
  double initial_temperature = 10.0;
  double final_temperature = 1e-3;
};

/// Metropolis random walk under a geometric cooling schedule. Returns the
/// best point visited.
OptimumResult anneal(const Objective& f, std::vector<double> x0, std::span<const double> steps,
                     const AnnealingOptions& options, Pcg64& rng);

/// Largest Euclidean distance between two vertices.
double simplex_diameter(const std::vector<std::vector<double>>& vertices);

}  // namespace basla
