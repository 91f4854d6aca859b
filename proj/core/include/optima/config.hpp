#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "optima/numeric.hpp"

namespace optima {

/// N distinct unit vectors in R^n, stored row-major at high precision.
/// Immutable; the Gram matrix is computed once at construction.
class Configuration {
 public:
  /// Validates |x|^2 = 1 within 1e-12 and pairwise distinctness.
  Configuration(int dimension, std::vector<HighReal> coords, std::string name = {});

  /// Builds from double coordinates. With renormalize == false the rows
  /// must already be unit vectors within `norm_tol`.
  static Configuration from_doubles(int dimension, std::span<const double> coords, std::string name = {},
                                    bool renormalize = false, double norm_tol = 1e-12);

  int dimension() const { return dimension_; }
  std::size_t size() const { return size_; }
  const std::string& name() const { return name_; }

  std::span<const HighReal> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dimension_), static_cast<std::size_t>(dimension_)};
  }
  const std::vector<HighReal>& coords() const { return coords_; }
  const HighReal& inner_product(std::size_t i, std::size_t j) const { return gram_[i * size_ + j]; }

  std::vector<double> coords_double() const;

  /// Applies x -> Q x to every point (Q assumed orthogonal) and renormalizes.
  Configuration transformed(const Eigen::MatrixXd& q) const;

 private:
  int dimension_;
  std::size_t size_;
  std::vector<HighReal> coords_;
  std::vector<HighReal> gram_;
  std::string name_;
};

/// Multiplicities A_t of ordered pairs at each inner product t.
struct DistanceDistribution {
  int dimension = 0;
  std::size_t size = 0;
  /// Sorted by t; every multiplicity positive.
  std::vector<std::pair<HighReal, std::uint64_t>> entries;

  std::uint64_t total() const;
  /// Multiplicity of the cluster within tol of t (0 if absent).
  std::uint64_t at(double t, double tol = 1e-9) const;
};

/// Catalog constructors.
Configuration ngon(int count);
Configuration simplex(int dimension);
Configuration cross_polytope(int dimension);
Configuration icosahedron();
Configuration e8_roots();

/// Looks up "ngon:N", "simplex:n", "cross-polytope:n", "icosahedron",
/// "e8-roots" (underscores accepted in place of dashes).
Configuration catalog(std::string_view spec);

/// Inner products clustered by single linkage at merge_tol.
/// Throws ClusterAmbiguityError when two clusters are closer than 10*merge_tol.
DistanceDistribution distance_distribution(const Configuration& c, double merge_tol = 1e-9);

/// m distinct inner products strictly below 1.
struct InnerProductSpectrum {
  int m = 0;
  std::vector<HighReal> values;
};
InnerProductSpectrum inner_product_spectrum(const Configuration& c, double merge_tol = 1e-9);

/// Sum over ordered pairs of P_k^n(<x,y>), including x = y.
double kernel_sum(const Configuration& c, int k);
double kernel_sum(int dimension, std::span<const double> coords, int k);

/// Largest k <= k_max with vanishing kernel sums for degrees 1..k
/// (|sum| <= eps * N^2); 0 when degree 1 already fails.
int design_strength(const Configuration& c, int k_max, double eps = 1e-9);

/// The N x N matrix [P_k^n(<x_i, x_j>)] in double precision.
Eigen::MatrixXd kernel_matrix(int dimension, std::span<const double> coords, int k);

/// Haar-random orthogonal matrix from a seeded generator.
Eigen::MatrixXd random_orthogonal(int dimension, std::uint64_t seed);

/// N independent uniform points on S^{n-1}, row-major.
std::vector<double> random_sphere_points(int dimension, std::size_t count, std::uint64_t seed);

}  // namespace optima
