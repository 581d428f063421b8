#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace adhmlab {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backing type canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "p/q" and surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  try {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw std::invalid_argument("empty");
    return Rational(std::string(text.substr(a, b - a + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

inline Rational rational_pow(const Rational& q, long long e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw std::domain_error("inverse of zero");
    return Rational(0);
  }
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace adhmlab
