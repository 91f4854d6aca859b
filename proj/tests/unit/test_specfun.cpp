#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optima/errors.hpp"
#include "optima/specfun.hpp"
#include "oracles.hpp"

using namespace optima;

TEST(Gegenbauer, SecondPolynomialIsExact) {
  for (int n : {3, 4, 5, 8, 24}) {
    const Polynomial<Rational> p = gegenbauer(n, 2);
    EXPECT_EQ(p, (Polynomial<Rational>{Rational(-1, n), Rational(0), Rational(1)})) << "n=" << n;
  }
}

TEST(Gegenbauer, MonicAndParity) {
  for (int n : {2, 3, 4, 5, 8})
    for (int k = 0; k <= 16; ++k) {
      const Polynomial<Rational> p = gegenbauer(n, k);
      ASSERT_EQ(p.degree(), k);
      EXPECT_EQ(p.leading(), Rational(1));
      for (int j = k - 1; j >= 0; j -= 2) EXPECT_EQ(p[static_cast<std::size_t>(j)], Rational(0));
    }
}

TEST(Gegenbauer, MatchesClassicalNormalization) {
  for (int n : {3, 4, 5, 8})
    for (int k = 0; k <= 16; ++k)
      for (double t : {-0.93, -0.4, 0.0, 0.27, 0.81, 1.0}) {
        const double ours = gegenbauer_value<double>(n, k, t);
        const double ref = oracle::monic_gegenbauer(n, k, t);
        EXPECT_NEAR(ours, ref, 1e-12 * (1 + std::abs(ref))) << n << " " << k << " " << t;
      }
}

TEST(Gegenbauer, RecurrenceMatchesExactPolynomials) {
  for (int n : {3, 8})
    for (int k = 0; k <= 12; ++k) {
      const Rational t(3, 7);
      EXPECT_EQ(gegenbauer_value<Rational>(n, k, t), gegenbauer(n, k)(t));
    }
}

TEST(Gegenbauer, OrthogonalUnderSphereWeight) {
  for (int n : {3, 4, 5, 8}) {
    std::vector<double> norms;
    for (int k = 0; k <= 16; ++k) {
      norms.push_back(std::sqrt(oracle::sphere_integral(n, [&](double t) {
            const double p = gegenbauer_value<double>(n, k, t);
            return p * p;
          })));
    }
    for (int i = 0; i <= 16; ++i)
      for (int j = i + 1; j <= 16; ++j) {
        const double ip = oracle::sphere_integral(
            n, [&](double t) { return gegenbauer_value<double>(n, i, t) * gegenbauer_value<double>(n, j, t); });
        EXPECT_LE(std::abs(ip), 1e-12 * norms[i] * norms[j]) << n << " " << i << " " << j;
      }
  }
}

TEST(Gegenbauer, MonicRoundTripExact) {
  for (int n : {3, 4, 5, 8})
    for (int k = 0; k <= 16; ++k) {
      const GegenbauerExpansion<Rational> e = expand(gegenbauer(n, k), n);
      ASSERT_EQ(e.degree(), k);
      for (int j = 0; j <= k; ++j) EXPECT_EQ(e[j], Rational(j == k ? 1 : 0));
    }
}

TEST(Gegenbauer, ExpansionRoundTripOnRandomPolynomial) {
  const Polynomial<Rational> p{Rational(3, 5), Rational(-2), Rational(7, 3), Rational(0), Rational(-1, 9)};
  for (int n : {3, 5, 8}) EXPECT_EQ(expand(p, n).to_monomial(), p);
}

TEST(Gegenbauer, RejectsBadArguments) {
  EXPECT_THROW(gegenbauer(1, 2), DomainError);
  EXPECT_THROW(gegenbauer(3, -1), DomainError);
}

TEST(Laguerre, LowOrders) {
  // L_1^a(x) = 1 + a - x, L_2^a(x) = x^2/2 - (a+2) x + (a+1)(a+2)/2.
  const Rational a(3, 2);
  EXPECT_EQ(laguerre(1, a), (Polynomial<Rational>{1 + a, Rational(-1)}));
  EXPECT_EQ(laguerre(2, a), (Polynomial<Rational>{(a + 1) * (a + 2) / 2, -(a + 2), Rational(1, 2)}));
}

// b_k is a Fourier eigenfunction with eigenvalue (-1)^k; checked against a
// direct Hankel transform.
TEST(FourierEigenbasis, EigenfunctionsOfHankelTransform) {
  for (int n : {1, 2, 3, 8})
    for (int k = 0; k <= 4; ++k) {
      auto f = [&](double r) { return fourier_eigenbasis_value<double>(n, k, r * r); };
      for (double s : {0.0, 0.3, 0.9, 1.6}) {
        double fhat;
        if (n == 1) {
          fhat = 2 * oracle::integrate([&](double r) { return f(r) * std::cos(2 * std::numbers::pi * r * s); }, 0, 8);
        } else {
          fhat = oracle::radial_fourier(n, f, s, 8);
        }
        EXPECT_NEAR(fhat, transform_parity(k) * f(s), 1e-9) << n << " " << k << " " << s;
      }
    }
}
