#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/catalog.hpp"
#include "laplacekit/quadrature.hpp"
#include "laplacekit/report.hpp"
#include "laplacekit/transform.hpp"

namespace laplacekit {

// Arc-sampled decay evidence: max |F| on expanding arcs C_n together with
// the least-squares slope of log(arc-max) against log(radius).
struct DecayProfile {
  std::vector<double> radii;
  std::vector<double> arc_maxima;
  std::optional<double> fitted_exponent;
};

namespace detail {

inline std::optional<double> loglog_slope(const std::vector<double>& x,
                                          const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(y[k] > 0.0) || !std::isfinite(y[k])) return std::nullopt;
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(x.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

}  // namespace detail

// Samples |p|^weight_exponent * |F(p)| on arcs C_n = sigma0 + n e^{i phi}.
inline DecayProfile sample_arc_decay(const AnalyticMap& F, const std::vector<double>& radii,
                                     int arc_samples, double weight_exponent = 0.0) {
  if (arc_samples < 16) throw std::invalid_argument("sample_arc_decay: need >= 16 samples");
  DecayProfile profile;
  profile.radii = radii;
  for (double n : radii) {
    double arc_max = 0.0;
    for (int j = 0; j < arc_samples; ++j) {
      const double phi = -kPi / 2.0 + kPi * (j + 0.5) / arc_samples;
      const Complex p = F.abscissa() + n * std::polar(1.0, phi);
      const double v = std::abs(F.at_boundary(p)) * std::pow(std::abs(p), weight_exponent);
      arc_max = std::max(arc_max, v);
    }
    profile.arc_maxima.push_back(arc_max);
  }
  profile.fitted_exponent = detail::loglog_slope(profile.radii, profile.arc_maxima);
  return profile;
}

// Theorem-1 hypothesis probe: (a) |F| tends to 0 on expanding arcs,
// (b) the boundary trace F(sigma0 + is) exists as a Cauchy limit in
// Re p -> sigma0 at sampled s. A finite probe sequence cannot certify a
// limit; a pass means "consistent with".
inline CheckReport check_theorem1(const AnalyticMap& F, const std::vector<double>& radii,
                                  int arc_samples = 64, int boundary_samples = 16) {
  if (radii.size() < 3) throw std::invalid_argument("check_theorem1: need >= 3 radii");
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1])) {
      throw std::invalid_argument("check_theorem1: radii must increase");
    }
  }
  if (boundary_samples < 16) throw std::invalid_argument("check_theorem1: need >= 16 samples");

  CheckReport report;
  report.check_name = "theorem1";
  report.thresholds_used["arc-relative-drop"] = 0.1;
  report.thresholds_used["arc-absolute-factor"] = 1e-2;
  report.thresholds_used["boundary-cauchy-tolerance"] = 1e-6;

  DecayProfile profile;
  double scale = 0.0;
  try {
    scale = std::abs(F(Complex(F.abscissa() + 1.0, 0.0)));
    profile = sample_arc_decay(F, radii, arc_samples);
  } catch (const std::exception& e) {
    report.verdict = Verdict::inconclusive;
    report.notes = std::string("probe evaluation failed: ") + e.what();
    return report;
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    report.evidence.emplace_back("arc-max n=" + std::to_string(radii[k]),
                                 profile.arc_maxima[k]);
  }
  if (profile.fitted_exponent) {
    report.evidence.emplace_back("fitted-exponent", *profile.fitted_exponent);
  }

  const double first = profile.arc_maxima.front();
  const double last = profile.arc_maxima.back();
  bool arc_pass = false, arc_fail = false;
  if (first < 1e-14 && last < 1e-14) {
    arc_pass = true;  // identically vanishing transform
  } else if (!std::isfinite(last)) {
    arc_fail = true;
  } else {
    arc_pass = last < 0.1 * first && last < 1e-2 * scale &&
               profile.fitted_exponent && *profile.fitted_exponent < 0.0;
    arc_fail = last >= 0.5 * first;
  }

  // Boundary-trace existence is "for almost every s": probed on an offset
  // grid that avoids s = 0 and isolated bad points.
  int cauchy_ok = 0;
  bool boundary_eval_failed = false;
  for (int j = 0; j < boundary_samples; ++j) {
    const double s = -8.0 + 16.0 * (j + 0.5) / boundary_samples;
    try {
      const Complex f1 = F(Complex(F.abscissa() + 1e-2, s));
      const Complex f2 = F(Complex(F.abscissa() + 1e-3, s));
      const Complex f3 = F(Complex(F.abscissa() + 1e-4, s));
      const double d1 = std::abs(f1 - f2);
      const double d2 = std::abs(f2 - f3);
      if (d2 <= 0.5 * d1 + 1e-6) ++cauchy_ok;
    } catch (const std::exception&) {
      boundary_eval_failed = true;
    }
  }
  const double cauchy_fraction = static_cast<double>(cauchy_ok) / boundary_samples;
  report.evidence.emplace_back("boundary-cauchy-fraction", cauchy_fraction);
  const bool boundary_pass = cauchy_fraction >= 0.9 && !boundary_eval_failed;

  if (arc_pass && boundary_pass) {
    report.verdict = Verdict::pass;
    report.notes =
        "arc maxima consistent with F -> 0 at infinity (arc-sup reading of the "
        "sequence hypothesis); boundary trace Cauchy at sampled s";
  } else if (arc_fail || cauchy_fraction < 0.9) {
    report.verdict = Verdict::fail;
    report.notes = arc_fail ? "arc maxima do not tend to 0" : "boundary trace not Cauchy";
  } else {
    report.verdict = Verdict::inconclusive;
    report.notes = "decay evidence below decision thresholds";
  }
  return report;
}

// Lemma-1 decay premise: |p|^b |F(p)| -> 0 on expanding arcs, operationalized
// as b < (decay exponent of |F|) within a 0.05 tolerance on the fitted
// slope. On a pass the prediction f(0) = 0 is cross-checked against the
// t -> 0+ extrapolation of the Bromwich inverse.
inline CheckReport check_lemma1_decay(const AnalyticMap& F, double b,
                                      const std::vector<double>& radii,
                                      const InversionConfig& inv_cfg = {}) {
  if (!(b > 1.0)) throw std::invalid_argument("check_lemma1_decay: b must be > 1");
  CheckReport report;
  report.check_name = "lemma1-decay";
  report.thresholds_used["b"] = b;
  report.thresholds_used["exponent-tolerance"] = 0.05;
  report.thresholds_used["origin-absolute"] = 1e-2;

  DecayProfile profile;
  try {
    profile = sample_arc_decay(F, radii, 64);
  } catch (const std::exception& e) {
    report.verdict = Verdict::inconclusive;
    report.notes = std::string("probe evaluation failed: ") + e.what();
    return report;
  }
  DecayProfile weighted = sample_arc_decay(F, radii, 64, b);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    report.evidence.emplace_back("weighted-arc-max n=" + std::to_string(radii[k]),
                                 weighted.arc_maxima[k]);
  }

  bool premise = false;
  if (profile.arc_maxima.front() < 1e-14 && profile.arc_maxima.back() < 1e-14) {
    premise = true;
  } else if (profile.fitted_exponent) {
    report.evidence.emplace_back("fitted-exponent", *profile.fitted_exponent);
    premise = b <= -*profile.fitted_exponent + 0.05;
  }

  double f0 = 0.0;
  bool have_f0 = true;
  try {
    f0 = extrapolate_origin(F, inv_cfg);
    report.evidence.emplace_back("f(0+) extrapolation", f0);
  } catch (const std::exception&) {
    have_f0 = false;
  }

  if (!premise) {
    report.verdict = Verdict::fail;
    report.notes = "decay premise |p|^b |F| -> 0 fails; no prediction made";
    return report;
  }
  if (!have_f0) {
    report.verdict = Verdict::inconclusive;
    report.notes = "decay premise holds but the origin cross-check did not converge";
    return report;
  }
  if (std::abs(f0) < 1e-2) {
    report.verdict = Verdict::pass;
    report.notes = "decay premise holds and f(0+) extrapolation confirms f(0) = 0";
  } else {
    report.verdict = Verdict::fail;
    report.notes = "decay premise holds but f(0+) extrapolation contradicts f(0) = 0";
  }
  return report;
}

// Second proof route of Lemma 1: f(0) = (1/2pi) int F(is) ds over the
// boundary line, truncated at the given height.
inline Complex lemma1_second_proof(const AnalyticMap& F, double height,
                                   QuadratureConfig cfg = {}) {
  if (!(height > 0.0)) throw std::invalid_argument("lemma1_second_proof: height must be > 0");
  cfg.abs_tolerance = std::max(cfg.abs_tolerance, 1e-9);
  const double sigma = F.abscissa() + 1e-12;
  auto integrand = [&](double s) { return F.at_boundary(Complex(sigma, s)); };
  return integrate_real(integrand, -height, height, cfg) / (2.0 * kPi);
}

// The same line integral over doubling heights; the trend toward 0 is what
// the second proof predicts when the decay premise holds.
inline std::vector<std::pair<double, Complex>> lemma1_second_proof_trend(
    const AnalyticMap& F, double first_height, int doublings,
    const QuadratureConfig& cfg = {}) {
  std::vector<std::pair<double, Complex>> trend;
  double h = first_height;
  for (int k = 0; k <= doublings; ++k, h *= 2.0) {
    trend.emplace_back(h, lemma1_second_proof(F, h, cfg));
  }
  return trend;
}

namespace detail {

// int_{-inf}^{inf} |F(sigma + is)|^ell ds by symmetric window doubling.
// Throws ConvergenceError when the tail refuses to settle (divergent norm).
inline double line_norm_integral(const std::function<Complex(double)>& boundary, double ell,
                                 double s_window, double tail_fraction, int max_doublings,
                                 const QuadratureConfig& cfg) {
  auto integrand = [&](double s) -> Complex {
    return std::pow(std::abs(boundary(s)), ell);
  };
  double window = s_window;
  double total = integrate_real(integrand, -window, window, cfg).real();
  for (int k = 0; k < max_doublings; ++k) {
    const double upper = integrate_real(integrand, window, 2.0 * window, cfg).real();
    const double lower = integrate_real(integrand, -2.0 * window, -window, cfg).real();
    const double increment = upper + lower;
    total += increment;
    window *= 2.0;
    if (increment < tail_fraction * total || increment < 1e-14) return total;
  }
  throw ConvergenceError("line_norm_integral: tail does not settle", total,
                         std::numeric_limits<double>::infinity());
}

}  // namespace detail

// Paley-Wiener profile I(sigma) = int |F(sigma+is)|^2 ds on a sigma grid.
// Pass: every value finite and the sup attained on the boundary line.
inline CheckReport check_paley_wiener(const AnalyticMap& F, const std::vector<double>& sigma_grid,
                                      double s_window = 8.0) {
  if (sigma_grid.size() < 3) throw std::invalid_argument("check_paley_wiener: need >= 3 sigmas");
  if (std::abs(sigma_grid.front() - F.abscissa()) > 1e-12) {
    throw std::invalid_argument("check_paley_wiener: grid must start at the boundary sigma0");
  }
  CheckReport report;
  report.check_name = "paley-wiener";
  report.thresholds_used["tail-fraction"] = 1e-4;

  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-9;
  cfg.rel_tolerance = 1e-7;

  std::vector<double> values;
  for (double sigma : sigma_grid) {
    auto boundary = [&, sigma](double s) { return F.at_boundary(Complex(sigma, s)); };
    try {
      values.push_back(detail::line_norm_integral(boundary, 2.0, s_window, 1e-4, 30, cfg));
      report.evidence.emplace_back("I(sigma=" + std::to_string(sigma) + ")", values.back());
    } catch (const ConvergenceError&) {
      report.evidence.emplace_back("I(sigma=" + std::to_string(sigma) + ")",
                                   std::numeric_limits<double>::infinity());
      report.verdict = Verdict::fail;
      report.notes = "divergent line L2 norm at sigma = " + std::to_string(sigma);
      return report;
    }
  }

  const double sup = *std::max_element(values.begin(), values.end());
  if (values.front() >= sup * (1.0 - 1e-6)) {
    report.verdict = Verdict::pass;
    report.notes = "line L2 norms finite with sup attained at the boundary";
  } else {
    report.verdict = Verdict::fail;
    report.notes = "sup of I(sigma) not attained at the boundary line";
  }
  return report;
}

// Parseval identity on a catalog pair: lhs = int |F(sigma+is)|^2 ds,
// rhs = 2pi int_0^inf |e^{-sigma t} f(t)|^2 dt.
inline std::pair<double, double> parseval_identity(const CatalogEntry& entry, double sigma) {
  if (!entry.f) {
    throw std::domain_error("parseval_identity: entry has no time-domain representative");
  }
  if (sigma < entry.F.abscissa()) {
    throw std::domain_error("parseval_identity: sigma below the abscissa");
  }
  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-11;
  cfg.rel_tolerance = 1e-9;

  auto boundary = [&](double s) { return entry.F.at_boundary(Complex(sigma, s)); };
  const double lhs = entry.envelope.amplitude == 0.0
                         ? 0.0
                         : detail::line_norm_integral(boundary, 2.0, 8.0, 1e-6, 60, cfg);

  const double decay = 2.0 * (sigma - entry.envelope.rate);
  if (entry.envelope.amplitude > 0.0 && !(decay > 0.0)) {
    throw std::domain_error("parseval_identity: |e^{-sigma t} f|^2 not integrable");
  }
  const auto& f = *entry.f;
  auto squared = [&](double t) -> Complex {
    const double v = std::exp(-sigma * t) * f(t);
    return v * v;
  };
  const double rhs =
      2.0 * kPi *
      integrate_decaying(squared, 0.0,
                         ExpEnvelope{entry.envelope.amplitude * entry.envelope.amplitude, decay},
                         cfg)
          .real();
  return {lhs, rhs};
}

// Hausdorff-Young membership on the boundary line: ||f||_{l/(l-1)} <=
// (2pi)^{(l-1)/l} ||F||_l, with l = 1 mapping to the sup norm of f.
inline CheckReport check_hausdorff_young(const std::function<Complex(double)>& F_boundary,
                                         double ell) {
  if (!(ell >= 1.0)) throw std::invalid_argument("check_hausdorff_young: ell must be >= 1");
  CheckReport report;
  report.check_name = "hausdorff-young";
  report.thresholds_used["ell"] = ell;

  if (ell > 2.0) {
    report.verdict = Verdict::inconclusive;
    report.notes = "ell > 2: f may be a tempered distribution (not represented)";
    return report;
  }
  report.notes = "ell in [1,2]: f is a function. ";

  QuadratureConfig cfg;
  cfg.abs_tolerance = 1e-9;
  cfg.rel_tolerance = 1e-6;
  double norm_F = 0.0;
  try {
    norm_F = std::pow(detail::line_norm_integral(F_boundary, ell, 8.0, 1e-4, 30, cfg), 1.0 / ell);
  } catch (const ConvergenceError& e) {
    // ||F||_ell = inf makes the right-hand side infinite: the inequality
    // holds with no content.
    report.verdict = Verdict::pass;
    report.evidence.emplace_back("divergent ||F||_ell partial sum", std::abs(e.best_estimate));
    report.evidence.emplace_back("bound", std::numeric_limits<double>::infinity());
    report.notes += "boundary norm ||F||_ell diverges; the bound is vacuous";
    return report;
  }
  report.evidence.emplace_back("norm-F", norm_F);

  // f(t) = (1/2pi) int F(is) e^{ist} ds on a midpoint time grid (cell
  // centers avoid the jump of f at t = 0), heights doubled to convergence
  // per point.
  const double t_end = 16.0;
  const double dt = 0.05;
  const auto npts = static_cast<std::size_t>(t_end / dt);
  std::vector<double> f_abs(npts, 0.0);
  for (std::size_t k = 0; k < npts; ++k) {
    const double t = dt * (static_cast<double>(k) + 0.5);
    Complex acc = 0.0;
    Complex value = 0.0, prev = 0.0;
    double s_prev = 0.0;
    for (double h = 64.0; h <= 64.0 * (1 << 13); h *= 2.0) {
      acc += detail::oscillatory_segment(F_boundary, t, s_prev, h, 16, 0.1);
      acc += detail::oscillatory_segment(F_boundary, t, -h, -s_prev, 16, 0.1);
      value = acc / (2.0 * kPi);
      if (s_prev > 0.0 && std::abs(value - prev) < std::max(1e-4, 1e-3 * std::abs(value))) break;
      prev = value;
      s_prev = h;
    }
    f_abs[k] = std::abs(value);
  }

  double norm_f = 0.0;
  if (ell == 1.0) {
    norm_f = *std::max_element(f_abs.begin(), f_abs.end());
    report.evidence.emplace_back("sup-norm-f", norm_f);
  } else {
    const double q = ell / (ell - 1.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < npts; ++k) acc += std::pow(f_abs[k], q) * dt;
    norm_f = std::pow(acc, 1.0 / q);
    report.evidence.emplace_back("norm-f", norm_f);
  }

  const double bound = std::pow(2.0 * kPi, (ell - 1.0) / ell) * norm_F;
  report.evidence.emplace_back("bound", bound);
  if (norm_f <= bound * (1.0 + 1e-6)) {
    report.verdict = Verdict::pass;
    report.notes += "inequality holds";
  } else {
    report.verdict = Verdict::fail;
    report.notes += "inequality violated";
  }
  return report;
}

// Non-transform witness (Hoelder route): R(sigma) = |F(sigma)| (l' sigma)^{1/l'}
// must stay bounded for any transform of an L_ell function. Unbounded growth
// along sigma -> 0+ witnesses that no such f exists. Verdict pass = witness
// found.
inline CheckReport nontransform_witness(const AnalyticMap& F, double ell,
                                        std::vector<double> sigma_sequence = {0.5, 0.2, 0.1}) {
  if (!(ell >= 1.0)) throw std::invalid_argument("nontransform_witness: ell must be >= 1");
  if (sigma_sequence.size() < 2) {
    throw std::invalid_argument("nontransform_witness: need >= 2 sigmas");
  }
  for (std::size_t k = 1; k < sigma_sequence.size(); ++k) {
    if (!(sigma_sequence[k] < sigma_sequence[k - 1]) || !(sigma_sequence[k] > 0.0)) {
      throw std::invalid_argument("nontransform_witness: sigmas must decrease toward 0");
    }
  }

  CheckReport report;
  report.check_name = "nontransform-witness";
  report.thresholds_used["growth-factor"] = 100.0;
  report.thresholds_used["absolute-floor"] = 1e3;
  report.thresholds_used["ell"] = ell;

  std::vector<double> log_ratio;
  for (double sigma : sigma_sequence) {
    const double abs_F = std::abs(F(Complex(sigma, 0.0)));
    double lr;
    if (ell == 1.0) {
      lr = std::log(abs_F);  // l' = inf: the Hoelder factor degenerates to 1
    } else {
      const double lp = ell / (ell - 1.0);
      lr = std::log(abs_F) + std::log(lp * sigma) / lp;
    }
    log_ratio.push_back(lr);
    report.evidence.emplace_back("log R(sigma=" + std::to_string(sigma) + ")", lr);
  }

  bool increasing = true;
  for (std::size_t k = 1; k < log_ratio.size(); ++k) {
    increasing = increasing && log_ratio[k] > log_ratio[k - 1];
  }
  const bool exploding = increasing &&
                         log_ratio.back() > log_ratio.front() + std::log(100.0) &&
                         log_ratio.back() > std::log(1e3);
  if (exploding) {
    report.verdict = Verdict::pass;
    report.notes = "R(sigma) grows without bound: F is not the transform of any finite-L_ell f";
  } else {
    report.verdict = Verdict::fail;
    report.notes = "no witness: R(sigma) stays bounded along the sequence";
  }
  return report;
}

}  // namespace laplacekit
