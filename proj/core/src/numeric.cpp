#include "optima/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "optima/errors.hpp"

namespace optima {

Rational to_rational(const HighReal& x) {
  Rational q;
  mpfr_get_q(q.backend().data(), x.backend().data());
  return q;
}

Rational to_rational(double x) { return Rational(x); }

HighReal to_high(const Rational& q) {
  HighReal num(boost::multiprecision::numerator(q));
  HighReal den(boost::multiprecision::denominator(q));
  return num / den;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("malformed number '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), s);
    Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  // Decimal with optional exponent.
  std::string_view mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    try {
      exponent = std::stol(std::string(s.substr(e + 1)));
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + std::string(s) + "'");
    }
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    i = 1;
  }
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < mant.size(); ++i) {
    const char c = mant[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      throw ParseError("malformed number '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + std::string(s) + "'");
  // A leading zero would make the string octal to GMP.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Integer num(digits);
  if (neg) num = -num;
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
}

HighReal parse_high(std::string_view text) { return to_high(parse_rational(text)); }

std::string to_string(const HighReal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace optima
