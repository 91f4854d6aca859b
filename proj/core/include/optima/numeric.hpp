#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/math/constants/constants.hpp>

namespace optima {

/// Exact rational arithmetic (GMP).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Decimal digits carried by the high-precision path.
inline constexpr int kHighDigits = 120;

/// Fixed-precision MPFR real used for certificates and catalog coordinates.
using HighReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kHighDigits>,
    boost::multiprecision::et_off>;

template <class T>
T pi() {
  return boost::math::constants::pi<T>();
}

/// Exact conversion of an MPFR value (a dyadic rational) to a rational.
Rational to_rational(const HighReal& x);

/// Exact conversion of a double to a rational.
Rational to_rational(double x);

HighReal to_high(const Rational& q);

double to_double(const Rational& q);
inline double to_double(const HighReal& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Parses "3", "-1/2", "0.125", "1e-3" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Parses a decimal string at full working precision. Throws ParseError.
HighReal parse_high(std::string_view text);

/// Decimal rendering with `digits` significant digits.
std::string to_string(const HighReal& x, int digits);
std::string to_string(const Rational& q);

/// Scalar conversion between the three arithmetic types used by the library.
template <class To, class From>
To convert(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return to_double(x);
  } else if constexpr (std::is_same_v<To, Rational>) {
    return to_rational(x);
  } else if constexpr (std::is_same_v<To, HighReal> && std::is_same_v<From, Rational>) {
    return to_high(x);
  } else {
    return To(x);
  }
}

}  // namespace optima
