#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace laplacekit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex require_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) {
    throw std::domain_error(std::string(what) + ": non-finite complex value");
  }
  return z;
}

// Principal argument in (-pi, pi]. std::arg returns -pi for points just
// below the negative real axis with a signed zero; fold that onto +pi so
// the branch cut sits on the non-positive real axis.
inline double principal_arg(const Complex& p) {
  double a = std::arg(p);
  if (a <= -kPi) a = kPi;
  return a;
}

// p^alpha on the principal branch, analytic off the non-positive real axis.
inline Complex principal_power(const Complex& p, double alpha) {
  if (p.real() == 0.0 && p.imag() == 0.0) {
    throw std::domain_error("principal_power: p = 0 is on the branch point");
  }
  const double log_r = std::log(std::abs(p));
  const double theta = principal_arg(p);
  return std::polar(std::exp(alpha * log_r), alpha * theta);
}

// Parses flat-text complex literals: "a", "ai", "a+bi", "a-bi", "i", "-i".
inline Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("parse_complex: empty literal");

  const bool has_i = s.back() == 'i';
  if (has_i) s.pop_back();

  // Split at the last top-level sign (not part of an exponent, not leading).
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  auto to_double = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = std::stod(part, &used);
    if (used != part.size()) {
      throw std::invalid_argument("parse_complex: bad literal '" + text + "'");
    }
    return v;
  };

  if (!has_i) {
    if (split != std::string::npos) {
      throw std::invalid_argument("parse_complex: bad literal '" + text + "'");
    }
    return Complex(to_double(s), 0.0);
  }
  if (split == std::string::npos) return Complex(0.0, to_double(s));
  return Complex(to_double(s.substr(0, split)), to_double(s.substr(split)));
}

}  // namespace laplacekit
