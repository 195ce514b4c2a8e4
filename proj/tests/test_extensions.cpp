#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "basla/basla.hpp"
#include "basla/extensions.hpp"
#include "basla/quadrature.hpp"
#include "basla/rng.hpp"
#include "doctest.h"

using namespace basla;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::array<double, 1> kOrigin{0.0};

QuadratureOptions tight() {
  QuadratureOptions o;
  o.rel_tol = 1e-12;
  return o;
}

double total_mass(const ExtensionDensity& d) {
  if (std::holds_alternative<LogFamily>(d.params())) {
    // Over (0, inf) in log coordinates.
    auto f = [&](double y) {
      const double z = std::exp(y);
      return z > 0.0 && std::isfinite(z) ? d.pdf(z) * z : 0.0;
    };
    return integrate_oracle(f, -kInf, kInf, kOrigin, tight());
  }
  return integrate_oracle([&](double z) { return d.pdf(z); }, -kInf, kInf, kOrigin, tight());
}

std::vector<double> random_points(std::uint64_t seed, double lo, double hi) {
  Pcg64 rng(seed, 0);
  std::vector<double> zs(1000);
  for (auto& z : zs) z = lo + (hi - lo) * rng.uniform();
  return zs;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_SUITE("normalization") {
  TEST_CASE("every family integrates to one") {
    const std::vector<ExtensionParams> grid{
        TwoParam{0.0, 0.0},   TwoParam{1.0, 1.0},   TwoParam{-0.5, 2.0},
        TwoParam{3.0, -0.2},  TwoParam{0.1, 0.0},   AlphaBeta{0.0, 0.0},
        AlphaBeta{0.0, 1.0},  AlphaBeta{1.0, 0.5},  AlphaBeta{-2.0, 0.01},
        AlphaBeta{0.5, -3.0}, Generalized{0.0, 1.0}, Generalized{1.0, 1.0},
        Generalized{-0.7, 3.0}, Generalized{2.0, -0.5}, Generalized{0.3, 25.0},
        LogFamily{0.0},       LogFamily{1.0},       LogFamily{-2.0},
        LogFamily{0.4},       LogFamily{10.0},
    };
    for (const auto& params : grid) {
      const ExtensionDensity d(params);
      INFO(extension_name(params) << " " << d.normalizer().used);
      CHECK(std::abs(total_mass(d) - 1.0) < 1e-8);
    }
  }

  TEST_CASE("two-parameter constant at alpha1 = alpha2 = 1") {
    const auto c = check_normalizer(TwoParam{1.0, 1.0});
    CHECK(c.closed_form == 16.0 * (1.0 + 16.0 + 204.0 + 1440.0 + 2520.0));
    CHECK(c.relative_difference < 1e-10);
    CHECK_FALSE(c.overridden);
  }

  TEST_CASE("alpha-beta constant at (0, 1)") {
    const auto c = check_normalizer(AlphaBeta{0.0, 1.0});
    CHECK(c.closed_form == 4.0 * (1.0 + 1440.0 + 119750400.0));
    CHECK(c.relative_difference < 1e-10);
    CHECK_FALSE(c.overridden);
  }

  TEST_CASE("generalized constant: closed form holds for lambda > 0") {
    for (auto p : {Generalized{1.0, 1.0}, Generalized{-0.7, 3.0}, Generalized{0.0, 0.5}}) {
      const auto c = check_normalizer(p);
      CHECK(c.relative_difference < 1e-10);
      CHECK_FALSE(c.overridden);
      CHECK(c.used == c.quadrature);
    }
  }

  TEST_CASE("generalized constant: closed form is replaced for lambda < 0") {
    const ExtensionDensity d(Generalized{1.0, -1.0});
    const auto& c = d.normalizer();
    CHECK(c.closed_form == doctest::Approx(24.75).epsilon(1e-12));
    CHECK(c.quadrature == doctest::Approx(36.25).epsilon(1e-10));
    CHECK(c.overridden);
    CHECK(c.used == c.quadrature);
    CHECK_FALSE(d.override_note().empty());
  }

  TEST_CASE("log family uses the core constant") {
    const auto c = check_normalizer(LogFamily{1.5});
    CHECK(c.closed_form == normalizer(1.5));
    CHECK(c.relative_difference < 1e-10);
  }
}

TEST_SUITE("examples") {
  TEST_CASE("zero parameters give the Laplace density") {
    for (double z : {-3.0, 0.0, 0.4, 7.0}) {
      const double laplace = 0.5 * std::exp(-std::abs(z));
      CHECK(pdf_two_param(z, 0.0, 0.0) == doctest::Approx(laplace).epsilon(1e-14));
      CHECK(pdf_alpha_beta(z, 0.0, 0.0) == doctest::Approx(laplace).epsilon(1e-14));
    }
    CHECK(pdf_two_param(0.0, 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("generalized with alpha = 0 and lambda = 1") {
    const ExtensionDensity d(Generalized{0.0, 1.0});
    for (double z : {-4.0, -0.3, 0.0, 1.2, 6.0}) {
      CHECK(d.pdf(z) == doctest::Approx(std::exp(-std::abs(z)) * laplace_cdf(z)).epsilon(1e-10));
    }
  }

  TEST_CASE("generalized mass moves right as lambda grows") {
    double previous = 1.0;
    for (double lambda : {1.0, 10.0, 100.0, 1000.0}) {
      const ExtensionDensity d(Generalized{0.0, lambda});
      const double left =
          integrate_oracle([&](double z) { return d.pdf(z); }, -kInf, 0.0, {}, tight());
      CHECK(left < previous);
      previous = left;
    }
    CHECK(previous < 1e-3);
  }

  TEST_CASE("log family") {
    CHECK(pdf_log_family(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    const ExtensionDensity d(LogFamily{0.0});
    auto g = [&](double y) {
      const double z = std::exp(y);
      return z > 0.0 ? d.pdf(z) * z : 0.0;
    };
    const double below_one = integrate_oracle(g, -kInf, 0.0, {}, tight());
    CHECK(below_one == doctest::Approx(0.5).epsilon(1e-10));
    const ExtensionDensity d1(LogFamily{1.0});
    CHECK(std::abs(total_mass(d1) - 1.0) < 1e-8);
  }

  TEST_CASE("log family is the exponential of the core variable") {
    const BASLaParams core(0.8);
    for (double z : {0.01, 0.5, 1.0, 3.0, 50.0}) {
      CHECK(pdf_log_family(z, 0.8) == doctest::Approx(pdf(std::log(z), core) / z).epsilon(1e-13));
    }
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ExtensionDensity(Generalized{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(pdf_log_family(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pdf_log_family(-2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionDensity(TwoParam{NAN, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(pdf_two_param(INFINITY, 1.0, 0.0), std::invalid_argument);
  }

  TEST_CASE("family names") {
    CHECK(extension_name(TwoParam{0, 0}) == "two-param");
    CHECK(extension_name(AlphaBeta{0, 0}) == "alpha-beta");
    CHECK(extension_name(Generalized{0, 1}) == "generalized");
    CHECK(extension_name(LogFamily{0}) == "log-basla2");
  }
}

TEST_SUITE("reductions and reflections") {
  TEST_CASE("alpha2 = 0 and beta = 0 reduce to the core density") {
    const auto zs = random_points(1, -20.0, 20.0);
    for (double a : {-1.5, 0.3, 2.0}) {
      const ExtensionDensity two(TwoParam{a, 0.0});
      const ExtensionDensity ab(AlphaBeta{a, 0.0});
      const BASLaParams core(a);
      for (double z : zs) {
        const double ref = pdf(z, core);
        REQUIRE(two.pdf(z) == doctest::Approx(ref).epsilon(1e-13));
        REQUIRE(ab.pdf(z) == doctest::Approx(ref).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("negating z and the shapes leaves the density unchanged") {
    const auto zs = random_points(2, -20.0, 20.0);
    const ExtensionDensity two(TwoParam{0.7, -1.3});
    const ExtensionDensity two_r(TwoParam{-0.7, 1.3});
    const ExtensionDensity ab(AlphaBeta{0.4, 0.2});
    const ExtensionDensity ab_r(AlphaBeta{-0.4, -0.2});
    const ExtensionDensity gen(Generalized{1.1, 2.0});
    const ExtensionDensity gen_r(Generalized{-1.1, -2.0});
    for (double z : zs) {
      REQUIRE(two.pdf(z) == doctest::Approx(two_r.pdf(-z)).epsilon(1e-13));
      REQUIRE(ab.pdf(z) == doctest::Approx(ab_r.pdf(-z)).epsilon(1e-13));
      REQUIRE(gen.pdf(z) == doctest::Approx(gen_r.pdf(-z)).epsilon(1e-9));
    }
  }

  TEST_CASE("log family reciprocal law") {
    const auto ys = random_points(3, -10.0, 10.0);
    const ExtensionDensity d(LogFamily{1.3});
    const ExtensionDensity d_r(LogFamily{-1.3});
    for (double y : ys) {
      const double z = std::exp(y);
      REQUIRE(d.pdf(z) == doctest::Approx(d_r.pdf(1.0 / z) / (z * z)).epsilon(1e-12));
    }
  }
}

TEST_SUITE("limits") {
  TEST_CASE("alpha-beta with large alpha approaches the bimodal Laplace") {
    for (double a : {1e3, -1e3}) {
      const ExtensionDensity d(AlphaBeta{a, 0.0});
      double sup = 0.0;
      for (int i = 0; i <= 40000; ++i) {
        const double z = -20.0 + 40.0 * i / 40000.0;
        sup = std::max(sup, std::abs(d.pdf(z) - bimodal_laplace_pdf(z)));
      }
      CHECK(sup <= 1e-3);
    }
  }

  TEST_CASE("alpha-beta with large beta approaches z^12 e^-|z| / (2 * 12!)") {
    const double c = 2.0 * factorial(12);
    for (double b : {100.0, -100.0}) {
      const ExtensionDensity d(AlphaBeta{0.5, b});
      double sup = 0.0;
      for (int i = 0; i <= 40000; ++i) {
        const double z = -20.0 + 40.0 * i / 40000.0;
        sup = std::max(sup, std::abs(d.pdf(z) - std::pow(z, 12) * std::exp(-std::abs(z)) / c));
      }
      CHECK(sup <= 1e-3);
    }
    // The limit is itself a density.
    const double mass = integrate_oracle(
        [&](double z) { return std::pow(z, 12) * std::exp(-std::abs(z)) / c; }, -kInf, kInf,
        kOrigin, tight());
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}
