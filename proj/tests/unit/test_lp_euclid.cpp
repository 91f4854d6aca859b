#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optima/errors.hpp"
#include "optima/lp_euclid.hpp"
#include "optima/reference.hpp"
#include "oracles.hpp"

using namespace optima;

namespace {

OptimizedAux optimized(int n, int degree, AuxStrategy s = AuxStrategy::forced_roots) {
  OptimizeOptions o;
  o.dimension = n;
  o.degree = degree;
  o.strategy = s;
  o.polish_iterations = 300;
  return optimize_aux(o);
}

}  // namespace

TEST(RadialAux, TransformMatchesHankelOracle) {
  for (int n : {1, 3, 8}) {
    RadialAux a;
    a.dimension = n;
    a.scale = HighReal("0.8");
    a.coeffs = {HighReal(1), HighReal("0.3"), HighReal("-0.2"), HighReal("0.05")};
    auto f = [&](double r) { return to_double(a.value(HighReal(r * r))); };
    for (double s : {0.0, 0.4, 1.1}) {
      double want;
      if (n == 1) {
        want = 2 * oracle::integrate([&](double r) { return f(r) * std::cos(2 * std::numbers::pi * r * s); }, 0, 10);
      } else {
        want = oracle::radial_fourier(n, f, s, 10);
      }
      EXPECT_NEAR(to_double(a.transform_value(HighReal(s * s))), want, 1e-9) << n << " " << s;
    }
  }
}

TEST(RadialAux, ParityIdentity) {
  RadialAux a;
  a.dimension = 8;
  a.coeffs = {HighReal(2), HighReal(-1), HighReal("0.5"), HighReal("0.25")};
  const RadialAux twice = a.transformed().transformed();
  EXPECT_EQ(twice.coeffs, a.coeffs);
  a.scale = HighReal("1.7");
  const RadialAux scaled = a.transformed().transformed();
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) EXPECT_LT(abs(scaled.coeffs[k] - a.coeffs[k]), HighReal("1e-110"));
  EXPECT_LT(abs(scaled.scale - a.scale), HighReal("1e-110"));
}

TEST(RadialAux, GaussianIsNotAdmissible) {
  RadialAux g;
  g.dimension = 2;
  g.coeffs = {HighReal(1)};
  const EuclidResult r = verify_and_bound(g);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.margins.failure.empty());
}

TEST(RadialAux, RejectsMalformed) {
  RadialAux a;
  a.dimension = 3;
  EXPECT_THROW(verify_and_bound(a), DomainError);
  a.coeffs = {HighReal(1)};
  a.r_min = 0;
  EXPECT_THROW(verify_and_bound(a), DomainError);
}

TEST(CohnElkies, SoundnessFloor) {
  for (int n : {1, 2, 8}) {
    const OptimizedAux a = optimized(n, n == 8 ? 15 : 11);
    ASSERT_TRUE(a.check.valid) << n;
    EXPECT_GE(to_double(a.check.density_bound), reference_density(n) - 1e-12) << n;
    EXPECT_LE(to_double(a.check.density_bound), 1.0 + 1e-9 + (n == 1 ? 0.05 : 0.0)) << n;
  }
}

TEST(CohnElkies, ScaleInvariance) {
  const OptimizedAux a = optimized(8, 11);
  ASSERT_TRUE(a.check.valid);
  for (const char* lambda : {"0.5", "2"}) {
    const EuclidResult r = verify_and_bound(a.aux.rescaled(HighReal(lambda)));
    EXPECT_TRUE(r.valid) << lambda;
    EXPECT_LT(abs(r.density_bound - a.check.density_bound), HighReal("1e-90") ) << lambda;
  }
}

TEST(CohnElkies, MonotoneInDegree) {
  double prev = 2;
  for (int d : {4, 8, 12}) {
    const OptimizedAux a = optimized(8, d);
    ASSERT_TRUE(a.check.valid) << d;
    const double b = to_double(a.check.density_bound);
    EXPECT_LE(b, prev) << d;
    prev = b;
  }
}

TEST(CohnElkies, ExplicitRootsReproduce) {
  const OptimizedAux a = optimized(8, 11);
  OptimizeOptions o;
  o.dimension = 8;
  o.degree = 11;
  o.strategy = AuxStrategy::forced_roots;
  o.f_roots = a.f_roots;
  o.fhat_roots = a.fhat_roots;
  const OptimizedAux b = optimize_aux(o);
  EXPECT_TRUE(b.check.valid);
  EXPECT_LT(abs(b.check.density_bound - a.check.density_bound), HighReal("1e-60"));
}

TEST(CohnElkies, PoissonCheckOnE8) {
  const OptimizedAux a = optimized(8, 15);
  ASSERT_TRUE(a.check.valid);
  // Scale E8 so its minimal length equals r_min = 1.
  const Lattice l = e8().scaled(1 / std::sqrt(2.0));
  const PoissonBoundReport r = lattice_poisson_bound_check(l, a.aux);
  EXPECT_TRUE(r.primal_ok);
  EXPECT_TRUE(r.dual_ok);
  EXPECT_TRUE(r.volume_ok);
  EXPECT_NEAR(to_double(r.sum_f), to_double(r.sum_fhat) / r.covolume, 1e-9 * std::abs(to_double(r.sum_f)) + 1e-10);
  EXPECT_THROW(lattice_poisson_bound_check(e8().scaled(0.5), a.aux), PreconditionError);
}

TEST(CohnElkies, TaylorProbeOfGaussianLimit) {
  // For a pure Gaussian g(x) = exp(-pi x^2) the quadratic coefficient is -pi.
  RadialAux g;
  g.dimension = 8;
  g.coeffs = {HighReal(1)};
  const TaylorProbe t = taylor_probe(g);
  EXPECT_NEAR(t.g_quadratic, -std::numbers::pi, 1e-12);
  EXPECT_NEAR(t.ghat_quadratic, -std::numbers::pi, 1e-12);
  EXPECT_NEAR(t.g_quartic, std::numbers::pi * std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(t.mu, 1, 1e-14);
}

TEST(CohnElkies, StrategyNames) {
  EXPECT_EQ(parse_aux_strategy("forced-roots"), AuxStrategy::forced_roots);
  EXPECT_EQ(to_string(parse_aux_strategy("nelder_mead")), "nelder-mead");
  EXPECT_THROW(parse_aux_strategy("simplex"), ParseError);
}
