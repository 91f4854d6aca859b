#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "optima/config.hpp"
#include "optima/errors.hpp"
#include "optima/specfun.hpp"
#include "oracles.hpp"

using namespace optima;

namespace {

std::vector<Configuration> catalog_entries() {
  return {ngon(5), ngon(12), simplex(3), simplex(8), cross_polytope(4), cross_polytope(8), icosahedron(), e8_roots()};
}

}  // namespace

TEST(Configuration, RejectsNonUnitAndDuplicatePoints) {
  const std::vector<double> bad{1, 0, 0, 2};
  EXPECT_THROW(Configuration::from_doubles(2, bad), DomainError);
  const std::vector<double> dup{1, 0, 1, 0};
  EXPECT_THROW(Configuration::from_doubles(2, dup), DomainError);
  const Configuration ok = Configuration::from_doubles(2, bad, "", true);
  EXPECT_EQ(ok.size(), 2u);
}

TEST(Configuration, CatalogLookup) {
  EXPECT_EQ(catalog("ngon:7").size(), 7u);
  EXPECT_EQ(catalog("simplex:4").size(), 5u);
  EXPECT_EQ(catalog("cross_polytope:3").size(), 6u);
  EXPECT_EQ(catalog("e8-roots").size(), 240u);
  EXPECT_THROW(catalog("dodecahedron"), ParseError);
}

TEST(Configuration, E8RootsMatchBruteForce) {
  const Configuration c = e8_roots();
  const oracle::Histogram h = oracle::brute_force_distribution(8, oracle::e8_unit_roots());
  const DistanceDistribution d = distance_distribution(c);
  ASSERT_EQ(d.entries.size(), h.t.size());
  for (std::size_t i = 0; i < h.t.size(); ++i) {
    EXPECT_NEAR(to_double(d.entries[i].first), h.t[i], 1e-12);
    EXPECT_EQ(d.entries[i].second, h.count[i]);
  }
  EXPECT_EQ(d.at(-1), 240u);
  EXPECT_EQ(d.at(-0.5), 13440u);
  EXPECT_EQ(d.at(0), 30240u);
  EXPECT_EQ(d.at(0.5), 13440u);
  EXPECT_EQ(d.at(1), 240u);
}

TEST(Configuration, IcosahedronMatchesIndependentCoordinates) {
  const oracle::Histogram h = oracle::brute_force_distribution(3, oracle::icosahedron_points());
  const DistanceDistribution d = distance_distribution(icosahedron());
  ASSERT_EQ(d.entries.size(), h.t.size());
  for (std::size_t i = 0; i < h.t.size(); ++i) EXPECT_EQ(d.entries[i].second, h.count[i]);
}

TEST(Configuration, DistributionTotalsAndDiagonal) {
  for (const auto& c : catalog_entries()) {
    const DistanceDistribution d = distance_distribution(c);
    EXPECT_EQ(d.total(), c.size() * c.size()) << c.name();
    EXPECT_EQ(d.at(1), c.size()) << c.name();
  }
}

TEST(Configuration, CatalogIsBalanced) {
  for (const auto& c : catalog_entries()) {
    const std::vector<double> x = c.coords_double();
    const int n = c.dimension();
    std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int d = 0; d < n; ++d) sum[d] += x[i * n + d];
    double s2 = 0;
    for (double v : sum) s2 += v * v;
    EXPECT_NEAR(kernel_sum(c, 1), s2, 1e-9) << c.name();
    EXPECT_NEAR(kernel_sum(c, 1), 0.0, 1e-9) << c.name();
  }
}

TEST(Configuration, SpectrumAndDesignStrength) {
  struct Case {
    Configuration c;
    int m;
    int strength;
  };
  const std::vector<Case> cases{{simplex(5), 1, 2}, {cross_polytope(5), 2, 3}, {icosahedron(), 3, 5},
                                {e8_roots(), 4, 7}, {ngon(7), 3, 6}, {ngon(12), 6, 11}};
  for (const auto& k : cases) {
    const InnerProductSpectrum s = inner_product_spectrum(k.c);
    EXPECT_EQ(s.m, k.m) << k.c.name();
    const int t = design_strength(k.c, 14);
    EXPECT_EQ(t, k.strength) << k.c.name();
    EXPECT_GE(t, 2 * s.m - 1) << k.c.name();
  }
  const InnerProductSpectrum e8 = inner_product_spectrum(e8_roots());
  ASSERT_EQ(e8.values.size(), 4u);
  const double want[] = {-1, -0.5, 0, 0.5};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(to_double(e8.values[i]), want[i], 1e-30);
}

TEST(Configuration, OrthogonalInvariance) {
  for (const auto& c : catalog_entries()) {
    const Configuration r = c.transformed(random_orthogonal(c.dimension(), 17));
    const DistanceDistribution a = distance_distribution(c);
    const DistanceDistribution b = distance_distribution(r);
    ASSERT_EQ(a.entries.size(), b.entries.size()) << c.name();
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      EXPECT_NEAR(to_double(a.entries[i].first), to_double(b.entries[i].first), 1e-12);
      EXPECT_EQ(a.entries[i].second, b.entries[i].second);
    }
    EXPECT_EQ(inner_product_spectrum(c).m, inner_product_spectrum(r).m);
    EXPECT_EQ(design_strength(c, 12), design_strength(r, 12)) << c.name();
  }
}

TEST(Configuration, RandomOrthogonalIsOrthogonal) {
  const Eigen::MatrixXd q = random_orthogonal(6, 3);
  EXPECT_LT((q.transpose() * q - Eigen::MatrixXd::Identity(6, 6)).norm(), 1e-12);
}

TEST(Configuration, ClusterAmbiguityIsReported) {
  // Two inner products 3e-9 apart: closer than 10 * merge_tol but not merged.
  const double a = 1e-9 * 3;
  std::vector<double> x{1, 0, 0, 0, 1, 0, a, 0.5, std::sqrt(0.75 - a * a)};
  const Configuration c = Configuration::from_doubles(3, x);
  EXPECT_THROW(distance_distribution(c, 1e-9), ClusterAmbiguityError);
}

// Positive-definite kernels on random configurations.
TEST(Configuration, RandomKernelsArePositiveSemidefinite) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const std::size_t N = 2 + rng() % 39;
    const std::vector<double> x = random_sphere_points(n, N, rng());
    for (int k = 1; k <= 10; ++k) {
      const Eigen::MatrixXd m = kernel_matrix(n, x, k);
      const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff();
      EXPECT_GE(min_eig, -1e-9) << n << " " << N << " " << k;
      EXPECT_GE(kernel_sum(n, x, k), -1e-9 * double(N * N));
    }
  }
}
