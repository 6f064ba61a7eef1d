#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "skewtor/complex_format.hpp"

namespace skewtor {

// A complex scalar times the formal central monomial q^a mu^b, where q stands
// for e^{2*pi*i*theta} and mu for a positive real parameter. Products add
// exponents; conjugation negates the q exponent (|q| = 1) and fixes the mu
// exponent (mu > 0 real).
struct Coefficient {
  std::complex<double> value{1.0, 0.0};
  int q_power = 0;
  int mu_power = 0;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  static Coefficient zero() { return {{0.0, 0.0}, 0, 0}; }
  static Coefficient one() { return {}; }
  static Coefficient scalar(std::complex<double> v) { return {v, 0, 0}; }
  static Coefficient q(int power = 1) { return {{1.0, 0.0}, power, 0}; }
  static Coefficient mu(int power = 1) { return {{1.0, 0.0}, 0, power}; }

  bool is_zero() const { return value == std::complex<double>(0.0, 0.0); }

  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {a.value * b.value, a.q_power + b.q_power, a.mu_power + b.mu_power};
  }

  Coefficient operator-() const { return {-value, q_power, mu_power}; }

  Coefficient inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of zero coefficient");
    return {1.0 / value, -q_power, -mu_power};
  }

  Coefficient conjugated() const { return {std::conj(value), -q_power, mu_power}; }

  bool equals(const Coefficient& other, double tol) const {
    if (q_power != other.q_power || mu_power != other.mu_power) return false;
    if (tol <= 0.0) return value == other.value;
    return std::abs(value - other.value) <= tol;
  }

  // Numeric instantiation q = e^{2*pi*i*theta}, mu = mu_value.
  std::complex<double> at(double theta, double mu_value) const {
    std::complex<double> out = value;
    if (q_power != 0)
      out *= std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * theta * q_power));
    if (mu_power != 0) out *= std::pow(mu_value, mu_power);
    return out;
  }

  std::string str() const {
    std::string out;
    auto append_factor = [&out](const std::string& f) {
      if (!out.empty()) out += ' ';
      out += f;
    };
    if (value != std::complex<double>(1.0, 0.0) || (q_power == 0 && mu_power == 0))
      append_factor(format_complex(value));
    if (q_power != 0) append_factor(q_power == 1 ? "q" : "q^" + std::to_string(q_power));
    if (mu_power != 0) append_factor(mu_power == 1 ? "mu" : "mu^" + std::to_string(mu_power));
    return out;
  }
};

}  // namespace skewtor
