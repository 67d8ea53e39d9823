#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/complex.hpp"
#include "laplacekit/contour.hpp"
#include "laplacekit/quadrature.hpp"
#include "laplacekit/special.hpp"

using namespace laplacekit;
using Catch::Approx;

TEST_CASE("principal_power on positive reals and the imaginary axis") {
  CHECK(principal_power({1.0, 0.0}, 0.25).real() == Approx(1.0));
  CHECK(principal_power({1.0, 0.0}, 0.25).imag() == Approx(0.0).margin(1e-15));

  // Arg i = pi/2 forces i^{1/4} = e^{i pi/8}.
  const Complex v = principal_power({0.0, 1.0}, 0.25);
  CHECK(v.real() == Approx(std::cos(kPi / 8.0)).epsilon(1e-12));
  CHECK(v.imag() == Approx(std::sin(kPi / 8.0)).epsilon(1e-12));
}

TEST_CASE("principal_power continuity approaching the cut from above") {
  // Continuity oracle: walk an arc toward -1 from the upper half-plane; the
  // limit must be e^{i pi/4} (Arg -> +pi on the principal branch).
  const Complex limit = std::polar(1.0, kPi / 4.0);
  double prev_dist = 1e9;
  for (double eps : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const Complex v = principal_power({-1.0, eps}, 0.25);
    const double dist = std::abs(v - limit);
    CHECK(dist < prev_dist + 1e-15);
    prev_dist = dist;
  }
  CHECK(std::abs(principal_power({-1.0, 1e-12}, 0.25) - limit) < 1e-12);
  CHECK_THROWS_AS(principal_power({0.0, 0.0}, 0.25), std::domain_error);
}

TEST_CASE("principal_power exponent addition on the right half-plane") {
  std::mt19937 rng(20240901);
  std::uniform_real_distribution<double> re(0.01, 10.0), im(-10.0, 10.0), ex(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const Complex p(re(rng), im(rng));
    const double a = ex(rng), b = ex(rng);
    const Complex lhs = principal_power(p, a) * principal_power(p, b);
    const Complex rhs = principal_power(p, a + b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("gamma at known values") {
  CHECK(laplacekit::gamma(1.0) == Approx(1.0).epsilon(1e-12));
  CHECK(laplacekit::gamma(0.5) == Approx(std::sqrt(kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(laplacekit::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(laplacekit::gamma(-2.0), std::domain_error);
}

TEST_CASE("gamma(-1/4) against the recurrence oracle") {
  // Independent route: Gamma(3/4) from the defining integral by quadrature,
  // then Gamma(-1/4) = Gamma(3/4) / (-1/4). The substitution t = u^4 removes
  // the endpoint singularity so the adaptive panels see a smooth integrand:
  // Gamma(3/4) = 4 int_0^inf u^2 e^{-u^4} du.
  QuadratureConfig cfg;
  auto integrand = [](double u) -> Complex {
    return 4.0 * u * u * std::exp(-u * u * u * u);
  };
  const double gamma34 = integrate_real(integrand, 0.0, 7.0, cfg).real();
  const double oracle = gamma34 / (-0.25);
  CHECK(laplacekit::gamma(-0.25) == Approx(oracle).epsilon(1e-8));
  CHECK(laplacekit::gamma(-0.25) == Approx(-4.9016668).epsilon(1e-6));
}

TEST_CASE("gamma recurrence property") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.1, 5.0);
  for (int k = 0; k < 200; ++k) {
    const double x = xs(rng);
    CHECK(laplacekit::gamma(x + 1.0) == Approx(x * laplacekit::gamma(x)).epsilon(1e-10));
  }
}

TEST_CASE("lower incomplete gamma") {
  for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    CHECK(lower_incomplete_gamma(1.0, x) == Approx(1.0 - std::exp(-x)).epsilon(1e-10));
  }
  CHECK(lower_incomplete_gamma(0.25, 0.0) == 0.0);

  // Quadrature oracle for the defining integral at (1/4, 1); substituting
  // s = u^4 gives the smooth form 4 int_0^1 e^{-u^4} du.
  QuadratureConfig cfg;
  auto integrand = [](double u) -> Complex { return 4.0 * std::exp(-u * u * u * u); };
  const double oracle = integrate_real(integrand, 0.0, 1.0, cfg).real();
  CHECK(lower_incomplete_gamma(0.25, 1.0) == Approx(oracle).epsilon(1e-10));

  CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(lower_incomplete_gamma(0.25, -1.0), std::domain_error);
}

TEST_CASE("integrate_real standard integrals") {
  QuadratureConfig cfg;
  auto exp_decay = [](double t) -> Complex { return std::exp(-t); };
  CHECK(integrate_decaying(exp_decay, 0.0, ExpEnvelope{1.0, 1.0}, cfg).real() ==
        Approx(1.0).epsilon(1e-9));

  // Endpoint-singular integrand, graded subdivision toward 0.
  auto singular = [](double t) -> Complex { return std::pow(t, -0.75); };
  CHECK(integrate_real(singular, 0.0, 1.0, cfg).real() == Approx(4.0).epsilon(1e-7));

  auto oscillatory = [](double t) -> Complex { return std::exp(-t) * std::cos(10.0 * t); };
  CHECK(integrate_decaying(oscillatory, 0.0, ExpEnvelope{1.0, 1.0}, cfg).real() ==
        Approx(1.0 / 101.0).epsilon(1e-8));
}

TEST_CASE("integrate_real reports non-convergence with its best estimate") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 64;
  auto harmonic = [](double t) -> Complex { return 1.0 / t; };
  CHECK_THROWS_AS(integrate_real(harmonic, 0.0, 1.0, cfg), ConvergenceError);
  try {
    integrate_real(harmonic, 0.0, 1.0, cfg);
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate.real()));
    CHECK(e.error_bound > 0.0);
  }
}

TEST_CASE("integrate_real is linear") {
  std::mt19937 rng(20240902);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  QuadratureConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng);
    double d0 = coeff(rng), d1 = coeff(rng), d2 = coeff(rng);
    const double alpha = coeff(rng), beta = coeff(rng);
    auto f = [&](double t) -> Complex { return (c0 + c1 * t + c2 * t * t) * std::exp(-t); };
    auto g = [&](double t) -> Complex { return (d0 + d1 * t + d2 * t * t) * std::exp(-t); };
    auto combo = [&](double t) -> Complex { return alpha * f(t) + beta * g(t); };
    const Complex lhs = integrate_real(combo, 0.0, 30.0, cfg);
    const Complex rhs =
        alpha * integrate_real(f, 0.0, 30.0, cfg) + beta * integrate_real(g, 0.0, 30.0, cfg);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("integrate_contour on closed contours") {
  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-10;
  const AnalyticMap one([](Complex) { return Complex(1.0); }, -5.0, "1");
  auto unit_weight = [](const Complex&) { return Complex(1.0); };
  CHECK(std::abs(integrate_contour(one, ContourSpec::closed(0.0, 3.0), unit_weight, cfg)) < 1e-8);

  // No pole enclosed.
  const AnalyticMap no_pole([](Complex q) { return 1.0 / ((q + 1.0) * (q + 1.0)); }, -0.5, "1/(q+1)^2");
  CHECK(std::abs(integrate_contour(no_pole, ContourSpec::closed(0.0, 3.0), unit_weight, cfg)) <
        1e-8);

  // Residue: pole at p inside the half-disc.
  const Complex p(1.0, 0.5);
  const AnalyticMap one_inside([](Complex) { return Complex(1.0); }, -5.0, "1");
  auto cauchy_weight = [p](const Complex& q) { return 1.0 / (q - p); };
  const Complex res =
      integrate_contour(one_inside, ContourSpec::closed(0.0, 3.0), cauchy_weight, cfg);
  CHECK(std::abs(res - Complex(0.0, 2.0 * kPi)) < 1e-7);
}

TEST_CASE("closed contours of analytic integrands vanish (property)") {
  std::mt19937 rng(20240903);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-9;
  auto unit_weight = [](const Complex&) { return Complex(1.0); };
  for (int trial = 0; trial < 10; ++trial) {
    const double a0 = c(rng), a1 = c(rng), a2 = c(rng);
    const AnalyticMap F(
        [=](Complex q) { return a0 + a1 * q + a2 * std::exp(-q); }, -10.0, "entire");
    const Complex v = integrate_contour(F, ContourSpec::closed(0.0, 2.0), unit_weight, cfg);
    CHECK(std::abs(v) < 1e-7);
  }
}

TEST_CASE("AnalyticMap enforces its half-plane contract") {
  const AnalyticMap F([](Complex p) { return 1.0 / p; }, 0.0, "1/p");
  CHECK_THROWS_AS(F(Complex(-0.1, 0.0)), std::domain_error);
  CHECK_THROWS_AS(F(Complex(0.0, 1.0)), std::domain_error);  // boundary needs the explicit path
  CHECK(std::abs(F.at_boundary(Complex(0.0, 1.0)) - Complex(0.0, -1.0)) < 1e-15);
}
