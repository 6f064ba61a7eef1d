#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "skewtor/errors.hpp"

namespace skewtor {

// Shortest round-trip decimal form of a double ("2", "-0.5", "1e-30").
inline std::string format_double(double x) {
  if (x == 0.0) return "0";  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, res.ptr);
  if (double r = std::rint(x); r == x && std::fabs(x) < 1e15) {
    auto res2 = std::to_chars(buf, buf + sizeof(buf), static_cast<long long>(r));
    return std::string(buf, res2.ptr);
  }
  return s;
}

// Canonical `a+bi` form: "0", "2", "-1.5", "i", "-i", "2i", "1+2i", "0.5-i".
inline std::string format_complex(const std::complex<double>& z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return format_double(re);
  std::string imag_part;
  if (im == 1.0) {
    imag_part = "i";
  } else if (im == -1.0) {
    imag_part = "-i";
  } else {
    imag_part = format_double(im) + "i";
  }
  if (re == 0.0) return imag_part;
  std::string out = format_double(re);
  if (imag_part[0] != '-') out += '+';
  out += imag_part;
  return out;
}

namespace detail {

// Consumes an unsigned decimal number (no sign) from s[pos...]. Returns nullopt
// if s[pos] does not start a number.
inline std::optional<double> scan_unsigned_number(std::string_view s, size_t& pos) {
  size_t start = pos;
  size_t k = pos;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  bool has_int = k > start;
  if (k < s.size() && s[k] == '.') {
    ++k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  }
  if (k == start || (!has_int && k == start + 1)) return std::nullopt;
  // optional exponent
  if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
    size_t e = k + 1;
    if (e < s.size() && (s[e] == '+' || s[e] == '-')) ++e;
    size_t d = e;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    if (d > e) k = d;
  }
  double value = std::strtod(std::string(s.substr(start, k - start)).c_str(), nullptr);
  pos = k;
  return value;
}

// One signed real-or-imaginary component: "2", "-3.5i", "+i", "i".
struct Component {
  double value;
  bool imaginary;
};

inline std::optional<Component> scan_component(std::string_view s, size_t& pos) {
  size_t k = pos;
  double sign = 1.0;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
    if (s[k] == '-') sign = -1.0;
    ++k;
  }
  if (k < s.size() && (s[k] == 'i' || s[k] == 'I')) {
    pos = k + 1;
    return Component{sign, true};
  }
  auto num = scan_unsigned_number(s, k);
  if (!num) return std::nullopt;
  bool imag = false;
  if (k < s.size() && (s[k] == 'i' || s[k] == 'I')) {
    imag = true;
    ++k;
  }
  pos = k;
  return Component{sign * *num, imag};
}

}  // namespace detail

// Parses `a+bi` complex syntax; `i` alone is the imaginary unit. Trailing
// characters are rejected.
inline std::complex<double> parse_complex(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(pos, end - pos);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty complex literal");

  size_t k = 0;
  auto first = detail::scan_component(s, k);
  if (!first) throw Error(ErrorCode::ParseError, "bad complex literal '" + std::string(text) + "'");
  double re = 0.0, im = 0.0;
  (first->imaginary ? im : re) = first->value;
  if (k < s.size()) {
    auto second = detail::scan_component(s, k);
    if (!second || k != s.size() || second->imaginary == first->imaginary)
      throw Error(ErrorCode::ParseError, "bad complex literal '" + std::string(text) + "'");
    (second->imaginary ? im : re) = second->value;
  }
  return {re, im};
}

}  // namespace skewtor
