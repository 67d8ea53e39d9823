#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/contour.hpp"
#include "laplacekit/grid_signal.hpp"
#include "laplacekit/quadrature.hpp"
#include "laplacekit/report.hpp"

namespace laplacekit {

// Declared growth envelope |f(t)| <= amplitude * exp(rate * t).
struct GrowthEnvelope {
  double amplitude = 1.0;
  double rate = 0.0;
};

struct InversionConfig {
  double sigma = 0.5;
  std::vector<double> truncation_heights = default_heights();
  double convergence_rel = 1e-6;
  double convergence_abs = 1e-8;
  QuadratureConfig quadrature{};

  static std::vector<double> default_heights(double base = 50.0, int doublings = 14) {
    std::vector<double> h;
    h.reserve(doublings + 1);
    double n = base;
    for (int k = 0; k <= doublings; ++k, n *= 2.0) h.push_back(n);
    return h;
  }

  void validate() const {
    if (truncation_heights.size() < 2) {
      throw std::invalid_argument("InversionConfig: need at least 2 truncation heights");
    }
    for (std::size_t k = 1; k < truncation_heights.size(); ++k) {
      if (!(truncation_heights[k] > truncation_heights[k - 1])) {
        throw std::invalid_argument("InversionConfig: heights must be strictly increasing");
      }
    }
    if (!(convergence_rel > 0.0) || !(convergence_abs > 0.0)) {
      throw std::invalid_argument("InversionConfig: convergence tolerances must be > 0");
    }
    quadrature.validate();
  }
};

struct PointConvergence {
  bool converged = false;
  double last_delta = 0.0;
  double height = 0.0;
};

struct InversionResult {
  GridSignal signal;
  std::vector<PointConvergence> per_point;
  double achieved_height = 0.0;
};

struct PointInversion {
  Complex value;
  PointConvergence convergence;
};

namespace detail {

// int_{lo}^{hi} g(s) e^{ist} ds over a piece of the vertical line with
// 0 <= lo < hi. Composite Gauss panels; the width is capped so the phase
// advances at most pi/2 per panel and so panels stay short relative to
// their distance from s = 0 (branch points of the catalog transforms sit
// at distance ~ d0 left of the line).
template <class G>
Complex oscillatory_piece(G& g, double t, double lo, double hi, int order, double d0) {
  const auto& [nodes, weights] = gauss_legendre(order);
  const double osc_w = kPi / (2.0 * std::max(std::abs(t), 1e-3));
  const double base_w = 0.5 * std::max(d0, 0.1);
  Complex acc = 0.0;
  double s = lo;
  while (s < hi) {
    const double w = std::min({osc_w, std::max(base_w, 0.25 * s), hi - s});
    const double mid = s + 0.5 * w;
    const double half = 0.5 * w;
    Complex panel = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double sk = mid + half * nodes[k];
      panel += weights[k] * g(sk) * std::polar(1.0, sk * t);
    }
    acc += panel * half;
    s += w;
  }
  return acc;
}

// Same integral over an arbitrary interval, split at s = 0 and mapped onto
// the positive side so the grading toward the origin applies on both sides.
template <class G>
Complex oscillatory_segment(G g, double t, double lo, double hi, int order, double d0) {
  if (!(lo < hi)) return 0.0;
  Complex acc = 0.0;
  if (hi > 0.0) {
    acc += oscillatory_piece(g, t, std::max(lo, 0.0), hi, order, d0);
  }
  if (lo < 0.0) {
    auto reflected = [&](double u) { return g(-u); };
    acc += oscillatory_piece(reflected, -t, std::max(-hi, 0.0), -lo, order, d0);
  }
  return acc;
}

}  // namespace detail

// Forward transform of a declared-envelope function: int_0^inf e^{-pt} f(t) dt.
inline Complex forward_transform(const std::function<double(double)>& f,
                                 const GrowthEnvelope& envelope, const Complex& p,
                                 const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (envelope.amplitude == 0.0) return 0.0;
  const double decay = p.real() - envelope.rate;
  if (!(decay > 0.0)) {
    throw std::domain_error("forward_transform: Re p too small for declared envelope");
  }
  auto integrand = [&](double t) { return std::exp(-p * t) * f(t); };
  return integrate_decaying(integrand, 0.0, ExpEnvelope{envelope.amplitude, decay}, cfg);
}

// Forward transform of a sampled signal: exact integral of the linear
// interpolant plus the declared exponential tail.
inline Complex forward_transform(const GridSignal& g, const Complex& p) {
  if (!(p.real() > 0.0)) {
    throw std::domain_error("forward_transform: GridSignal path requires Re p > 0");
  }
  const Complex pd = p * g.dt;
  const Complex E = std::exp(-pd);
  const Complex A = (1.0 - E) / p;                       // int e^{-pt} dt over one cell
  const Complex B = (1.0 - E * (1.0 + pd)) / (p * p);    // int e^{-pt} t dt over one cell
  Complex acc = 0.0;
  for (std::size_t k = 0; k + 1 < g.samples.size(); ++k) {
    const Complex slope = (g.samples[k + 1] - g.samples[k]) / g.dt;
    acc += std::exp(-p * g.t_at(k)) * (g.samples[k] * A + slope * B);
  }
  acc += g.samples.back() * std::exp(-p * g.t_end()) / (p + g.tail_rate);
  return acc;
}

// Truncated Bromwich inversion at a single time: successive truncation
// heights of (1/2pi i) int_{K_{sigma,n}} e^{qt} F(q) dq, converged when two
// heights agree within tolerance. The last iterate is returned regardless.
inline PointInversion invert_point(const AnalyticMap& F, double t, const InversionConfig& cfg) {
  cfg.validate();
  if (cfg.sigma < F.abscissa()) {
    throw std::domain_error("invert_point: sigma below the abscissa of analyticity");
  }
  // Boundary trace: stay just inside the open half-plane for branch safety.
  const double sigma = (cfg.sigma == F.abscissa()) ? F.abscissa() + 1e-12 : cfg.sigma;
  const double d0 = sigma - F.abscissa();

  auto boundary_values = [&](double s) { return F.at_boundary(Complex(sigma, s)); };
  const double scale = std::exp(sigma * t) / (2.0 * kPi);

  Complex acc = 0.0;
  Complex prev = 0.0;
  double s_prev = 0.0;
  PointInversion out;
  for (std::size_t k = 0; k < cfg.truncation_heights.size(); ++k) {
    const double n = cfg.truncation_heights[k];
    acc += detail::oscillatory_segment(boundary_values, t, s_prev, n,
                                       cfg.quadrature.panel_order, d0);
    acc += detail::oscillatory_segment(boundary_values, t, -n, -s_prev,
                                       cfg.quadrature.panel_order, d0);
    const Complex value = scale * acc;
    out.value = value;
    out.convergence.height = n;
    if (k > 0) {
      const double delta = std::abs(value - prev);
      out.convergence.last_delta = delta;
      if (delta < std::max(cfg.convergence_abs, cfg.convergence_rel * std::abs(value))) {
        out.convergence.converged = true;
        return out;
      }
    }
    prev = value;
    s_prev = n;
  }
  return out;
}

// Pointwise inversion over a uniform time grid. Non-convergence is reported
// per point, never thrown.
inline InversionResult bromwich_invert(const AnalyticMap& F, const std::vector<double>& times,
                                       const InversionConfig& cfg) {
  if (times.size() < 2) {
    throw std::invalid_argument("bromwich_invert: need at least 2 time points");
  }
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw std::invalid_argument("bromwich_invert: times must increase");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
      throw std::invalid_argument("bromwich_invert: times must be uniformly spaced");
    }
    if (!std::isfinite(times[k])) throw std::invalid_argument("bromwich_invert: non-finite time");
  }

  std::vector<Complex> values(times.size());
  std::vector<PointConvergence> conv(times.size());
  double achieved = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    PointInversion pi = invert_point(F, times[k], cfg);
    values[k] = pi.value;
    conv[k] = pi.convergence;
    achieved = std::max(achieved, pi.convergence.height);
  }
  InversionResult result;
  result.signal = GridSignal(times[0], dt, std::move(values));
  result.per_point = std::move(conv);
  result.achieved_height = achieved;
  return result;
}

// f(0+) as a right limit: samples at t = 1e-1, 1e-2, 1e-3. A clearly
// decaying power-law trend extrapolates to 0; otherwise linear
// extrapolation of the two smallest samples.
inline double extrapolate_origin(const AnalyticMap& F, const InversionConfig& cfg) {
  const double t1 = 1e-1, t2 = 1e-2, t3 = 1e-3;
  const double v1 = invert_point(F, t1, cfg).value.real();
  const double v2 = invert_point(F, t2, cfg).value.real();
  const double v3 = invert_point(F, t3, cfg).value.real();
  if (std::abs(v3) < 1e-3) return v3;
  if (std::abs(v3) < std::abs(v2) && std::abs(v2) < std::abs(v1)) {
    const double slope = std::log(std::abs(v2) / std::abs(v3)) / std::log(t2 / t3);
    if (slope > 0.05) return 0.0;
  }
  return v3 + (v3 - v2) * t3 / (t2 - t3);
}

// Causality test: the inverse evaluated at strictly negative times must
// vanish. Records the decay of the weighted arc integrals that justify
// closing the contour to the right.
inline CheckReport causality_check(const AnalyticMap& F, const std::vector<double>& negative_times,
                                   const InversionConfig& cfg) {
  if (negative_times.empty()) {
    throw std::invalid_argument("causality_check: no times given");
  }
  for (double t : negative_times) {
    if (!(t < 0.0)) throw std::invalid_argument("causality_check: times must be < 0");
  }
  CheckReport report;
  report.check_name = "causality";
  report.thresholds_used["max-abs-value"] = 1e-3;

  double max_abs = 0.0;
  bool all_converged = true;
  for (double t : negative_times) {
    const PointInversion pi = invert_point(F, t, cfg);
    max_abs = std::max(max_abs, std::abs(pi.value));
    all_converged = all_converged && pi.convergence.converged;
    report.evidence.emplace_back("inverse at t=" + std::to_string(t), std::abs(pi.value));
  }

  // Arc-decay evidence: |c_n e^{-q|t|} F(q)| integrals shrink with the radius.
  const double t_ref = std::abs(*std::max_element(negative_times.begin(), negative_times.end()));
  QuadratureConfig arc_cfg = cfg.quadrature;
  arc_cfg.rel_tolerance = 1e-4;
  arc_cfg.abs_tolerance = 1e-8;
  for (double n : {1e2, 1e3, 1e4}) {
    auto weight = [&](const Complex& q) { return std::exp(-q * t_ref); };
    try {
      const Complex arc = integrate_contour(F, ContourSpec::arc(F.abscissa(), n), weight, arc_cfg);
      report.evidence.emplace_back("arc integral n=" + std::to_string(n), std::abs(arc));
    } catch (const ConvergenceError& e) {
      report.evidence.emplace_back("arc integral n=" + std::to_string(n),
                                   std::abs(e.best_estimate));
    }
  }

  if (!all_converged && max_abs >= 1e-3) {
    report.verdict = Verdict::inconclusive;
    report.notes = "inversion did not converge at one or more points";
  } else if (max_abs < 1e-3) {
    report.verdict = Verdict::pass;
    report.notes = "inverse consistent with f(t) = 0 for t < 0";
  } else {
    report.verdict = Verdict::fail;
    report.notes = "inverse does not vanish for t < 0";
  }
  return report;
}

}  // namespace laplacekit
