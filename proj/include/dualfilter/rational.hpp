#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dualfilter {

/// Exact rational scalar used by every LP and reduced-cost computation.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Assignment costs are non-negative integers.
using Cost = std::int64_t;

/// Canonical "p/q" text (q = 1 for integers, sign carried by p).
inline std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

/// Accepts "p/q" or a plain integer "p".
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(std::string(text));
    boost::multiprecision::mpz_int num(std::string(text.substr(0, slash)));
    boost::multiprecision::mpz_int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
}

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace dualfilter
