#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "laplacekit/catalog.hpp"
#include "laplacekit/checks.hpp"

using namespace laplacekit;
using Catch::Approx;

namespace {

// Wide radius span so that even the |p|^{-1/4} decay of power-quarter
// clears the arc-drop thresholds.
const std::vector<double> kWideRadii = {1e2, 1e4, 1e6, 1e9};

}  // namespace

TEST_CASE("catalog lookup") {
  CHECK(catalog_entries().size() == 7);
  for (const char* name : {"exp-decay", "t-exp", "heaviside", "paper-2c", "power-quarter",
                           "counterexample-2e", "zero"}) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e);
    CHECK(e->name == name);
  }
  CHECK(find_entry("no-such-entry") == nullptr);
  CHECK(find_entry("paper-2c")->provenance == Provenance::closed_form_pair);
  CHECK(find_entry("power-quarter")->provenance == Provenance::transform_only);
  CHECK(find_entry("counterexample-2e")->provenance == Provenance::counterexample);
}

TEST_CASE("declared envelopes actually bound the time functions") {
  for (const CatalogEntry& e : catalog_entries()) {
    if (!e.f) continue;
    for (double t = 0.0; t <= 30.0; t += 0.05) {
      const double bound = e.envelope.amplitude * std::exp(e.envelope.rate * t);
      INFO(e.name << " at t=" << t);
      CHECK(std::abs((*e.f)(t)) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("paper-2c closed form matches the convolution oracle") {
  // Oracle: f(t) = (1/Gamma(1/4)) int_0^t e^{-(t-s)} s^{-3/4} ds computed by
  // direct adaptive quadrature, independent of the series implementation.
  // The substitution s = u^4 makes the integrand smooth:
  //   f(t) = (4/Gamma(1/4)) int_0^{t^{1/4}} e^{-(t - u^4)} du.
  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-12;
  const double g14 = laplacekit::gamma(0.25);
  const auto& f = *find_entry("paper-2c")->f;
  for (double t : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
    auto integrand = [&](double u) -> Complex {
      const double u4 = u * u * u * u;
      return 4.0 * std::exp(-(t - u4));
    };
    const double oracle =
        integrate_real(integrand, 0.0, std::pow(t, 0.25), cfg).real() / g14;
    CHECK(f(t) == Approx(oracle).epsilon(1e-9));
  }
  // Limits: f ~ 4 t^{1/4} / Gamma(1/4) as t -> 0+ and the algebraic tail
  // f ~ t^{-3/4} / Gamma(1/4) for large t (leading order).
  CHECK(f(1e-8) == Approx(4.0 * std::pow(1e-8, 0.25) / g14).epsilon(1e-6));
  CHECK(f(50.0) == Approx(std::pow(50.0, -0.75) / g14).epsilon(0.02));
}

TEST_CASE("transforms match forward transforms of the time functions") {
  QuadratureConfig cfg;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.provenance != Provenance::closed_form_pair) continue;
    for (const Complex p : {Complex(1.0, 0.0), Complex(0.7, 1.3), Complex(2.0, -0.5)}) {
      const Complex numeric = forward_transform(*e.f, e.envelope, p, cfg);
      const Complex closed = e.F.at_boundary(p);
      INFO(e.name << " at p=" << p.real() << "+" << p.imag() << "i");
      CHECK(std::abs(numeric - closed) < 1e-7);
    }
  }
}

TEST_CASE("expected check verdicts are reproduced") {
  for (const CatalogEntry& e : catalog_entries()) {
    INFO(e.name);
    {
      const auto it = e.expected_checks.find("theorem1");
      REQUIRE(it != e.expected_checks.end());
      CHECK(check_theorem1(e.F, kWideRadii).verdict == it->second);
    }
    {
      const auto it = e.expected_checks.find("paley-wiener");
      REQUIRE(it != e.expected_checks.end());
      const std::vector<double> grid = {e.F.abscissa(), e.F.abscissa() + 0.5,
                                        e.F.abscissa() + 1.0};
      CHECK(check_paley_wiener(e.F, grid).verdict == it->second);
    }
    {
      const auto it = e.expected_checks.find("witness");
      REQUIRE(it != e.expected_checks.end());
      CHECK(nontransform_witness(e.F, 2.0).verdict == it->second);
    }
    if (e.lemma1_b) {
      CHECK(check_lemma1_decay(e.F, *e.lemma1_b, {1e2, 1e3, 1e4}).verdict ==
            e.lemma1_expected);
    }
  }
}
