#include <gtest/gtest.h>

#include "optima/errors.hpp"
#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"
#include "optima/polynomial_roots.hpp"

using namespace optima;

TEST(Numeric, ParseRationalForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("-2.5E2"), Rational(-250));
  // Leading zeros must not switch GMP to octal.
  EXPECT_EQ(parse_rational("0.0707"), Rational(707, 10000));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Numeric, HighRealRoundTrip) {
  const HighReal third = HighReal(1) / 3;
  const Rational q = to_rational(third);
  EXPECT_EQ(to_high(q), third);
  EXPECT_LT(abs(to_high(q - Rational(1, 3))), HighReal("1e-119"));
  EXPECT_EQ(to_rational(0.75), Rational(3, 4));
}

TEST(Polynomial, ArithmeticAndDivision) {
  const Polynomial<Rational> a{Rational(-1), Rational(0), Rational(1)};  // t^2 - 1
  const Polynomial<Rational> b{Rational(1), Rational(1)};                // t + 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, (Polynomial<Rational>{Rational(-1), Rational(1)}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ((q * b), a);
  EXPECT_EQ(a.derivative(), (Polynomial<Rational>{Rational(0), Rational(2)}));
  EXPECT_EQ(a(Rational(3)), Rational(8));
  EXPECT_EQ(a.compose_affine(Rational(2), Rational(1))(Rational(1)), Rational(8));
}

TEST(PolynomialRoots, SturmCountsKnownRoots) {
  // (t-1)(t-2)(t-3)
  const Polynomial<Rational> p{Rational(-6), Rational(11), Rational(-6), Rational(1)};
  const SturmSequence s(p);
  EXPECT_EQ(s.count_roots(Rational(0), std::nullopt), 3);
  EXPECT_EQ(s.count_roots(Rational(1), Rational(2)), 1);
  EXPECT_EQ(s.count_roots(Rational(3), std::nullopt), 0);
  const auto iv = isolate_roots(p, Rational(0), std::nullopt, Rational(1, 1000));
  ASSERT_EQ(iv.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(iv[i].first, Rational(i + 1));
    EXPECT_GE(iv[i].second, Rational(i + 1));
  }
}

TEST(PolynomialRoots, SignCheckHandlesDoubleRoots) {
  // (t-1)^2 (t+5) is nonnegative on [-5, inf) with a touching root at 1.
  const Polynomial<Rational> sq{Rational(1), Rational(-2), Rational(1)};
  const Polynomial<Rational> p = sq * Polynomial<Rational>{Rational(5), Rational(1)};
  EXPECT_TRUE(check_sign(p, 1, Rational(-5), std::nullopt).holds);
  const SignCheck bad = check_sign(p, 1, Rational(-6), std::nullopt);
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.violation.has_value());
  EXPECT_LE(bad.violation->first, Rational(-5));
  EXPECT_EQ(odd_multiplicity_part(p), (Polynomial<Rational>{Rational(5), Rational(1)}));
}

TEST(PolynomialRoots, GcdIsMonic) {
  const Polynomial<Rational> a{Rational(-2), Rational(2)};  // 2t - 2
  const Polynomial<Rational> b{Rational(-3), Rational(0), Rational(3)};
  EXPECT_EQ(gcd(a, b), (Polynomial<Rational>{Rational(-1), Rational(1)}));
}
