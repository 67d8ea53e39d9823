#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "laplacekit/complex.hpp"

namespace laplacekit {

// A sampled time-axis function f(t). Linear interpolation between samples,
// zero before the grid, and an exponential tail |f| ~ f(T) e^{-tail_rate (t-T)}
// declared beyond the last sample.
struct GridSignal {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Complex> samples;
  double tail_rate = 1.0;

  GridSignal() = default;
  GridSignal(double t0_, double dt_, std::vector<Complex> samples_, double tail_rate_ = 1.0)
      : t0(t0_), dt(dt_), samples(std::move(samples_)), tail_rate(tail_rate_) {
    if (!(dt > 0.0)) throw std::invalid_argument("GridSignal: dt must be > 0");
    if (samples.size() < 2) throw std::invalid_argument("GridSignal: need at least 2 samples");
    for (const Complex& v : samples) require_finite(v, "GridSignal sample");
  }

  std::size_t size() const { return samples.size(); }
  double t_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
  double t_end() const { return t_at(samples.size() - 1); }

  Complex value_at(double t) const {
    if (t < t0) return 0.0;
    if (t >= t_end()) return samples.back() * std::exp(-tail_rate * (t - t_end()));
    const double u = (t - t0) / dt;
    const auto k = static_cast<std::size_t>(u);
    const double w = u - static_cast<double>(k);
    return samples[k] * (1.0 - w) + samples[k + 1] * w;
  }
};

}  // namespace laplacekit
