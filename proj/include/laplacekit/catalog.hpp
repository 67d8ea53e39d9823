#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/report.hpp"
#include "laplacekit/special.hpp"
#include "laplacekit/transform.hpp"

namespace laplacekit {

enum class Provenance { closed_form_pair, transform_only, counterexample };

// A named function/transform pair used by the checkers, the solver, the CLI
// and the test suite.
struct CatalogEntry {
  std::string name;
  std::optional<std::function<double(double)>> f;
  GrowthEnvelope envelope{1.0, 0.0};
  AnalyticMap F;
  Provenance provenance = Provenance::transform_only;
  std::map<std::string, Verdict> expected_checks;
  std::optional<double> lemma1_b;  // exponent used for the lemma-1 decay check
  Verdict lemma1_expected = Verdict::inconclusive;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;

    {
      CatalogEntry e{
          "exp-decay",
          [](double t) { return std::exp(-t); },
          GrowthEnvelope{1.0, -1.0},
          AnalyticMap([](Complex p) { return 1.0 / (p + 1.0); }, 0.0, "1/(p+1)"),
          Provenance::closed_form_pair,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::pass},
           {"witness", Verdict::fail}},
          1.5,
          Verdict::fail};
      v.push_back(std::move(e));
    }
    {
      CatalogEntry e{
          "t-exp",
          [](double t) { return t * std::exp(-t); },
          GrowthEnvelope{0.8, -0.5},
          AnalyticMap([](Complex p) { return 1.0 / ((p + 1.0) * (p + 1.0)); }, 0.0, "1/(p+1)^2"),
          Provenance::closed_form_pair,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::pass},
           {"witness", Verdict::fail}},
          1.5,
          Verdict::pass};
      v.push_back(std::move(e));
    }
    {
      CatalogEntry e{
          "heaviside",
          [](double) { return 1.0; },
          GrowthEnvelope{1.0, 0.0},
          AnalyticMap([](Complex p) { return 1.0 / p; }, 0.0, "1/p"),
          Provenance::closed_form_pair,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::fail},
           {"witness", Verdict::fail}},
          std::nullopt,
          Verdict::inconclusive};
      v.push_back(std::move(e));
    }
    {
      // Time-domain closed form derived by convolving e^{-t} with
      // t^{-3/4}/Gamma(1/4), i.e. e^{-t} int_0^t e^s s^{-3/4} ds / Gamma(1/4);
      // validated against the brute-force convolution in the test suite
      // before being trusted as a fixture. Decays like t^{-3/4}, so the
      // envelope is flat.
      CatalogEntry e{
          "paper-2c",
          [](double t) {
            return exp_weighted_lower_gamma(0.25, t) / laplacekit::gamma(0.25);
          },
          GrowthEnvelope{1.0, 0.0},
          AnalyticMap([](Complex p) { return 1.0 / ((1.0 + p) * principal_power(p, 0.25)); },
                      0.0, "1/((1+p)p^{1/4})"),
          Provenance::closed_form_pair,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::pass},
           {"witness", Verdict::fail}},
          1.25,
          Verdict::pass};
      v.push_back(std::move(e));
    }
    {
      CatalogEntry e{
          "power-quarter",
          std::nullopt,
          GrowthEnvelope{1.0, 0.0},
          AnalyticMap([](Complex p) { return principal_power(p, -0.25); }, 0.0, "1/p^{1/4}"),
          Provenance::transform_only,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::fail},
           {"witness", Verdict::fail}},
          std::nullopt,
          Verdict::inconclusive};
      v.push_back(std::move(e));
    }
    {
      CatalogEntry e{
          "counterexample-2e",
          std::nullopt,
          GrowthEnvelope{1.0, 0.0},
          AnalyticMap([](Complex p) { return std::exp(1.0 / (p * p)); }, 0.0, "e^{1/p^2}"),
          Provenance::counterexample,
          {{"theorem1", Verdict::fail},
           {"paley-wiener", Verdict::fail},
           {"witness", Verdict::pass}},
          std::nullopt,
          Verdict::inconclusive};
      v.push_back(std::move(e));
    }
    {
      CatalogEntry e{
          "zero",
          [](double) { return 0.0; },
          GrowthEnvelope{0.0, 0.0},
          AnalyticMap([](Complex) { return Complex(0.0); }, 0.0, "0"),
          Provenance::closed_form_pair,
          {{"theorem1", Verdict::pass},
           {"paley-wiener", Verdict::pass},
           {"witness", Verdict::fail}},
          std::nullopt,
          Verdict::inconclusive};
      v.push_back(std::move(e));
    }
    return v;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace laplacekit
