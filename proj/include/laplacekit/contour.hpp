#pragma once

#include <stdexcept>

#include "laplacekit/analytic_map.hpp"
#include "laplacekit/quadrature.hpp"

namespace laplacekit {

enum class ContourKind { vertical_segment, arc, closed };

// Geometric description of the contours used throughout: the vertical
// segment K_{sigma,n} from sigma-in to sigma+in (oriented up), the right
// half-circle arc C_n = center + n e^{i phi}, phi in [-pi/2, pi/2]
// (counterclockwise), and the closed contour L = (-K) u C_n.
struct ContourSpec {
  ContourKind kind;
  double sigma = 0.0;   // line abscissa for vertical segments
  double n = 0.0;       // half-height or radius
  double center = 0.0;  // arc center abscissa (sigma0)

  static ContourSpec vertical(double sigma, double n) {
    if (!(n > 0.0)) throw std::invalid_argument("ContourSpec: n must be > 0");
    return {ContourKind::vertical_segment, sigma, n, sigma};
  }
  static ContourSpec arc(double center, double n) {
    if (!(n > 0.0)) throw std::invalid_argument("ContourSpec: n must be > 0");
    return {ContourKind::arc, center, n, center};
  }
  static ContourSpec closed(double center, double n) {
    if (!(n > 0.0)) throw std::invalid_argument("ContourSpec: n must be > 0");
    return {ContourKind::closed, center, n, center};
  }
};

// Integrates weight(q) * F(q) dq along the contour. Each smooth piece is
// parameterized and handed to integrate_real; orientation signs are applied
// when summing.
template <class Weight>
Complex integrate_contour(const AnalyticMap& F, const ContourSpec& contour, Weight weight,
                          const QuadratureConfig& cfg = {}) {
  if (contour.center < F.abscissa() - 1e-12 ||
      (contour.kind != ContourKind::arc && contour.sigma < F.abscissa() - 1e-12)) {
    throw std::domain_error("integrate_contour: contour leaves the closed half-plane of F");
  }

  auto vertical = [&](double sigma) {
    auto integrand = [&](double s) {
      const Complex q(sigma, s);
      return weight(q) * F.at_boundary(q) * Complex(0.0, 1.0);
    };
    return integrate_real(integrand, -contour.n, contour.n, cfg);
  };
  auto arc = [&]() {
    auto integrand = [&](double phi) {
      const Complex dir = std::polar(1.0, phi);
      const Complex q = contour.center + contour.n * dir;
      return weight(q) * F.at_boundary(q) * Complex(0.0, 1.0) * contour.n * dir;
    };
    return integrate_real(integrand, -kPi / 2.0, kPi / 2.0, cfg);
  };

  switch (contour.kind) {
    case ContourKind::vertical_segment:
      return vertical(contour.sigma);
    case ContourKind::arc:
      return arc();
    case ContourKind::closed:
      // Counterclockwise: up the arc, then down the vertical segment.
      return arc() - vertical(contour.center);
  }
  throw std::logic_error("integrate_contour: unknown contour kind");
}

}  // namespace laplacekit
