#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "optima/numeric.hpp"

namespace optima {

/// Integral span of the rows of a nonsingular basis matrix.
class Lattice {
 public:
  /// Floating basis; rows are generators.
  explicit Lattice(Eigen::MatrixXd basis, std::string name = {});
  /// Exact rational basis, row-major n x n.
  Lattice(int dimension, std::vector<Rational> exact_basis, std::string name = {});

  int dimension() const { return static_cast<int>(basis_.rows()); }
  const std::string& name() const { return name_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  double covolume() const { return covolume_; }
  /// Present when the basis was given exactly.
  const std::optional<std::vector<Rational>>& exact_basis() const { return exact_; }

  /// Same lattice with basis U * B, U integral and unimodular.
  Lattice with_basis_change(const Eigen::MatrixXi& u) const;
  Lattice scaled(double factor) const;

 private:
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd gram_;
  double covolume_ = 0;
  std::optional<std::vector<Rational>> exact_;
  std::string name_;
};

Lattice zn(int n);
Lattice dn(int n);
Lattice e8();
Lattice hexagonal();
/// "zn:N", "dn:N", "e8", "hexagonal" (also "z3", "d4", "a2").
Lattice lattice_catalog(std::string_view name);

/// Basis (B^{-1})^T; exact when L has an exact basis.
Lattice dual(const Lattice& l);

/// True when both bases span the same point set.
bool same_lattice(const Lattice& a, const Lattice& b, double tol = 1e-9);

struct LatticeVector {
  std::vector<std::int64_t> coeffs;
  std::vector<double> coords;
  double norm2;
};

struct EnumerationOptions {
  /// Hard cap on reported vectors; exceeding it raises BudgetError.
  std::uint64_t max_count = 50'000'000;
  bool include_zero = false;
  /// Optional center in R^n; distances are then measured from it.
  std::optional<std::vector<double>> center;
};

/// All lattice vectors v with |v - center|^2 <= r2_max (zero excluded by
/// default), sorted lexicographically by coefficient vector.
std::vector<LatticeVector> enumerate_vectors(const Lattice& l, double r2_max, const EnumerationOptions& opt = {});

/// Streaming variant; returns the number of vectors visited.
std::uint64_t for_each_vector(const Lattice& l, double r2_max, const EnumerationOptions& opt,
                              const std::function<void(const std::vector<std::int64_t>&, double)>& visit);

/// Squared length of the shortest nonzero vector.
double minimal_norm(const Lattice& l);
/// Number of vectors of minimal length.
std::uint64_t kissing_number(const Lattice& l);

/// Volume of the n-ball of radius r.
double ball_volume(int n, double r);

double packing_density(const Lattice& l);

struct DeepHoleReport {
  int dimension;
  /// Distance from (1/2, ..., 1/2) to D_n.
  double halves_distance;
  /// Distance from the odd-sum integral hole e_1 to D_n.
  double integral_hole_distance;
  double covering_candidate;  // max of the two
  /// n = 8 only: the glue vector sits at the minimal distance of D_8, so
  /// D_8 together with its translate is the E_8 lattice.
  bool fills_to_e8;
};
DeepHoleReport deep_hole_check_dn(int n);

struct PoissonReport {
  double lhs;
  double rhs;
  double discrepancy;
  double trunc_r2;
  std::uint64_t terms_primal;
  std::uint64_t terms_dual;
};

/// Smallest squared radius whose Gaussian tail bound for both sides is
/// below `tolerance` relative to the leading term.
double poisson_truncation_radius(const Lattice& l, double s, double tolerance = 1e-14);

/// Sum of e^{-pi s |x|^2} over L against its Poisson dual side.
/// Throws TruncationError when trunc_r2 is below the required radius.
PoissonReport poisson_check(const Lattice& l, double s, std::optional<double> trunc_r2 = std::nullopt);

/// Upper bound for the number of lattice points in the ball |x| <= R,
/// from packing balls of radius lambda/2.
double lattice_point_count_bound(int n, double radius, double lambda);

/// Lattice file: "n" on the first line, then n rows of n rational or decimal
/// entries. '#' starts a comment.
Lattice read_lattice(std::istream& in, std::string name = {});
Lattice read_lattice_file(const std::string& path);

}  // namespace optima
