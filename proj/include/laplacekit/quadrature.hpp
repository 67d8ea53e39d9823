#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "laplacekit/complex.hpp"

namespace laplacekit {

struct QuadratureConfig {
  double abs_tolerance = 1e-10;
  double rel_tolerance = 1e-8;
  int max_subdivisions = 1 << 14;
  int panel_order = 16;

  void validate() const {
    if (!(abs_tolerance > 0.0) || !(rel_tolerance > 0.0)) {
      throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
    }
    if (panel_order < 2) {
      throw std::invalid_argument("QuadratureConfig: panel order must be >= 2");
    }
  }
};

// Declared exponential envelope |f(t)| <= amplitude * exp(-rate * t), used to
// truncate semi-infinite integrals.
struct ExpEnvelope {
  double amplitude = 1.0;
  double rate = 1.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Complex best, double bound)
      : std::runtime_error(what), best_estimate(best), error_bound(bound) {}

  Complex best_estimate;
  double error_bound;
};

// Gauss-Legendre nodes/weights on (-1, 1), cached per order. Newton iteration
// on the Legendre recurrence.
inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> nodes(n), weights(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::make_pair(std::move(nodes), std::move(weights))).first->second;
}

template <class F>
Complex gl_panel(F& f, double a, double b, int order) {
  const auto& [nodes, weights] = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    acc += weights[k] * f(mid + half * nodes[k]);
  }
  return acc * half;
}

// Globally adaptive quadrature on [a, b]: the panel with the largest error
// estimate is bisected until the summed estimates meet the tolerance.
// The error estimate per panel compares one Gauss panel against its two
// halves; the refined value is kept.
template <class F>
Complex integrate_real(F f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("integrate_real: requires a < b");
  }
  if (std::isinf(b)) {
    throw std::invalid_argument(
        "integrate_real: semi-infinite upper limit needs a declared envelope");
  }

  struct Panel {
    double a, b, err;
    Complex val;
    bool operator<(const Panel& o) const { return err < o.err; }
  };

  auto make_panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const Complex coarse = gl_panel(f, lo, hi, cfg.panel_order);
    const Complex fine =
        gl_panel(f, lo, mid, cfg.panel_order) + gl_panel(f, mid, hi, cfg.panel_order);
    if (!is_finite(fine)) {
      throw ConvergenceError("integrate_real: integrand not finite", fine,
                             std::numeric_limits<double>::infinity());
    }
    return Panel{lo, hi, std::abs(fine - coarse), fine};
  };

  std::priority_queue<Panel> heap;
  Panel first = make_panel(a, b);
  Complex total = first.val;
  double err_total = first.err;
  heap.push(first);
  int panels = 1;

  while (err_total > std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::abs(total))) {
    if (panels >= cfg.max_subdivisions) {
      throw ConvergenceError("integrate_real: subdivision limit reached", total, err_total);
    }
    Panel worst = heap.top();
    heap.pop();
    // Roundoff floor: further splitting cannot help.
    if (worst.err <= 1e-16 * std::abs(total) + 1e-300) break;
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = make_panel(worst.a, mid);
    Panel right = make_panel(mid, worst.b);
    total += left.val + right.val - worst.val;
    err_total += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  return total;
}

// Semi-infinite integral from a, truncated where the declared envelope drops
// below abs-tolerance / 10.
template <class F>
Complex integrate_decaying(F f, double a, const ExpEnvelope& env,
                           const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (env.amplitude <= 0.0) return 0.0;
  if (!(env.rate > 0.0)) {
    throw std::invalid_argument("integrate_decaying: envelope rate must be > 0");
  }
  const double cutoff = cfg.abs_tolerance / 10.0;
  if (env.amplitude <= cutoff) return 0.0;
  const double upper = std::max(a + 1.0, std::log(env.amplitude / cutoff) / env.rate);
  return integrate_real(std::move(f), a, upper, cfg);
}

}  // namespace laplacekit
