#pragma once

#include <cmath>
#include <stdexcept>

#include "laplacekit/complex.hpp"

namespace laplacekit {

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients. Relative error is well
// below 1e-12 for x >= 0.5.
inline double lanczos_gamma(double x) {
  static const double coeff[] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double acc = coeff[0];
  for (int k = 1; k < 9; ++k) acc += coeff[k] / (z + k);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace detail

// Gamma function on the reals, extended below 0.5 by the recurrence
// Gamma(x) = Gamma(x+1)/x. Poles at the non-positive integers are rejected.
inline double gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw std::domain_error("gamma: pole at non-positive integer");
  }
  double denom = 1.0;
  while (x < 0.5) {
    denom *= x;
    x += 1.0;
  }
  return detail::lanczos_gamma(x) / denom;
}

// Lower incomplete gamma  g(a, x) = int_0^x s^{a-1} e^{-s} ds,  a > 0, x >= 0.
// Series for x < a+1, Legendre continued fraction for the complement
// otherwise (the usual split, see e.g. Numerical Recipes 6.2).
inline double lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("lower_incomplete_gamma: a must be > 0");
  if (x < 0.0) throw std::domain_error("lower_incomplete_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;

  const double log_prefactor = a * std::log(x) - x;

  if (x < a + 1.0) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int k = 0; k < 500; ++k) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-15) {
        return sum * std::exp(log_prefactor);
      }
    }
    throw std::runtime_error("lower_incomplete_gamma: series did not converge");
  }

  // Modified Lentz for the upper tail Q(a,x), then g = Gamma(a) - upper.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 500; ++k) {
    const double an = -k * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) {
      const double upper = std::exp(log_prefactor) * h;
      return gamma(a) - upper;
    }
  }
  throw std::runtime_error("lower_incomplete_gamma: continued fraction did not converge");
}

// Exponentially weighted companion of the lower incomplete gamma:
//   e^{-x} int_0^x e^{s} s^{a-1} ds = e^{-x} sum_k x^{k+a} / (k! (k+a)).
// Every series term is positive, so there is no cancellation; the e^{-x}
// prefactor keeps the result bounded (it decays like x^{a-1} for large x).
inline double exp_weighted_lower_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("exp_weighted_lower_gamma: a must be > 0");
  if (x < 0.0) throw std::domain_error("exp_weighted_lower_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;

  double term = std::pow(x, a) / a;  // k = 0
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x * (k - 1.0 + a) / (static_cast<double>(k) * (k + a));
    sum += term;
    if (term < sum * 1e-16 && k > x) return sum * std::exp(-x);
  }
  throw std::runtime_error("exp_weighted_lower_gamma: series did not converge");
}

}  // namespace laplacekit
