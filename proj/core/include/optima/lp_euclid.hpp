#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optima/lattice.hpp"
#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"

namespace optima {

/// Radial Gaussian-times-polynomial function in R^n,
///   f(x) = sum_k c_k b_k(|x|^2 / scale^2),
/// in the Fourier eigenbasis b_k(r2) = exp(-pi r2) L_k^{(n/2-1)}(2 pi r2).
/// The bound it certifies assumes f(x) <= 0 for |x| >= r_min.
struct RadialAux {
  int dimension = 1;
  HighReal r_min = 1;
  HighReal scale = 1;
  std::vector<HighReal> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  HighReal value(const HighReal& r2) const;
  HighReal transform_value(const HighReal& r2) const;
  HighReal value_at_zero() const;
  HighReal transform_at_zero() const;
  /// The Fourier transform as a RadialAux of the same form.
  RadialAux transformed() const;
  /// Same function with r_min and scale multiplied by lambda.
  RadialAux rescaled(const HighReal& lambda) const;
  /// Polynomial parts in v = 2 pi |x|^2 / scale^2: f = exp(-v/2) p(v) and
  /// f^(t) = scale^n exp(-v/2) q(v) with v = 2 pi scale^2 |t|^2.
  Polynomial<HighReal> f_polynomial() const;
  Polynomial<HighReal> transform_polynomial() const;
};

struct EuclidMargins {
  HighReal f0 = 0;
  HighReal fhat0 = 0;
  /// Rational lower bound for 2 pi r_min^2 / scale^2 used in the sign check.
  Rational v_min;
  std::string failure;
  /// Offending squared-radius interval; second == nullopt means unbounded.
  std::optional<std::pair<HighReal, std::optional<HighReal>>> violation;
};

struct EuclidResult {
  HighReal density_bound = 0;
  bool valid = false;
  EuclidMargins margins;
};

/// Exact sign verification (Sturm sequences over Q on the coefficients as
/// stored) followed by the density bound vol(B(r_min/2)) f(0) / f^(0).
EuclidResult verify_and_bound(const RadialAux& aux);

struct PoissonBoundReport {
  HighReal sum_f;
  HighReal sum_fhat;
  HighReal f0;
  HighReal fhat0;
  double tail_f;
  double tail_fhat;
  double covolume;
  double trunc_r2;
  double trunc_r2_dual;
  /// sum_f <= f0 + tail_f.
  bool primal_ok;
  /// sum_fhat >= fhat0 - tail_fhat.
  bool dual_ok;
  /// f0 >= fhat0 / covolume.
  bool volume_ok;
  /// f0 * covolume / fhat0 - 1.
  HighReal slack;
};

/// Numerical check of the lattice-case inequalities on L. L must have
/// minimal length >= r_min and aux must verify; otherwise PreconditionError.
PoissonBoundReport lattice_poisson_bound_check(const Lattice& l, const RadialAux& aux);

enum class AuxStrategy { forced_roots, nelder_mead, hybrid };
AuxStrategy parse_aux_strategy(const std::string& name);
std::string to_string(AuxStrategy s);

struct OptimizeOptions {
  int dimension = 8;
  /// Maximum polynomial degree; the search uses the largest odd d <= degree.
  int degree = 15;
  AuxStrategy strategy = AuxStrategy::hybrid;
  std::uint64_t seed = 0;
  int polish_iterations = 2000;
  /// Squared radii in natural units (best lattice at covolume 1) for the
  /// double roots of f beyond r_min and of f^. Defaults come from the
  /// lattice shells.
  std::optional<std::vector<double>> f_roots;
  std::optional<std::vector<double>> fhat_roots;
};

struct OptimizedAux {
  RadialAux aux;
  EuclidResult check;
  int effective_degree;
  std::vector<double> f_roots;
  std::vector<double> fhat_roots;
  bool polished;
  int evaluations;
};

/// Searches the forced-root family (f with a sign change at r_min and double
/// roots elsewhere, f^ with double roots) by a high-precision linear solve,
/// optionally polishing the root positions by Nelder-Mead. Returns an
/// exactly verified function normalized to r_min = 1; throws
/// VerificationError when no candidate verifies.
OptimizedAux optimize_aux(const OptimizeOptions& opt);

/// Squared minimal distance of the reference lattice scaled to covolume 1.
double natural_min_norm(int n);

struct TaylorProbe {
  double g_quadratic;
  double ghat_quadratic;
  double g_quartic;
  double ghat_quartic;
  /// Radius factor mu with g(x) = f(x / mu) / f(0).
  double mu;
};

/// Rescales g(x) = f(x / mu) / f(0) so that g(0) = g^(0) = 1 and returns
/// the coefficients of |x|^2 and |x|^4 in g and g^.
TaylorProbe taylor_probe(const RadialAux& aux);

}  // namespace optima
