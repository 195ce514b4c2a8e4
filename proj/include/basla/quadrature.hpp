#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace basla {

/// Raised when adaptive quadrature cannot reach the requested absolute
/// tolerance within its refinement budget.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  // Accept error <= max(abs_tol, rel_tol * |integral|). Zero keeps the
  // purely absolute contract; large-valued integrands need a relative one.
  double rel_tol = 0.0;
  unsigned max_depth = 15;
};

/// Adaptive Gauss-Kronrod (7/15) integral of f over [lo, hi]. Either endpoint
/// may be infinite. Interior breakpoints (kinks such as |z - mu|) split the
/// range so that each piece is smooth. Used as the independent oracle for all
/// closed-form results in the library.
double integrate_oracle(const std::function<double(double)>& f, double lo,
                        double hi, std::span<const double> breakpoints = {},
                        const QuadratureOptions& options = {});

}  // namespace basla
