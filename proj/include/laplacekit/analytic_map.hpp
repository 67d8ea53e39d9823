#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "laplacekit/complex.hpp"

namespace laplacekit {

// An evaluable function C -> C together with its declared half-plane of
// analyticity Re p > sigma0. The abscissa is trusted, not certified.
class AnalyticMap {
 public:
  AnalyticMap(std::function<Complex(Complex)> evaluator, double sigma0, std::string label)
      : evaluator_(std::move(evaluator)), sigma0_(sigma0), label_(std::move(label)) {
    if (!evaluator_) throw std::invalid_argument("AnalyticMap: null evaluator");
  }

  // Evaluation strictly inside the half-plane.
  Complex operator()(const Complex& p) const {
    if (!(p.real() > sigma0_)) {
      throw std::domain_error("AnalyticMap '" + label_ +
                              "': evaluation outside half-plane Re p > sigma0");
    }
    return evaluator_(p);
  }

  // Boundary-trace evaluation: Re p = sigma0 is passed through explicitly.
  Complex at_boundary(const Complex& p) const {
    if (p.real() < sigma0_ - 1e-12) {
      throw std::domain_error("AnalyticMap '" + label_ +
                              "': evaluation left of the boundary line");
    }
    return evaluator_(p);
  }

  double abscissa() const { return sigma0_; }
  const std::string& label() const { return label_; }

 private:
  std::function<Complex(Complex)> evaluator_;
  double sigma0_;
  std::string label_;
};

}  // namespace laplacekit
