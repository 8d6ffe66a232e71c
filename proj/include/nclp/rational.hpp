#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nclp/error.hpp"

namespace nclp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace detail

// Accepts "p" or "p/q" with optional sign on p; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  Integer num = detail::parse_integer(text.substr(0, slash), text);
  Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Canonical "p/q" (or "p" when q == 1), lowest terms, sign on the numerator.
inline std::string to_string(const Rational& value) {
  return value.str();
}

inline Rational pow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace nclp
