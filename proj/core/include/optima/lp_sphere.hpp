#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optima/config.hpp"
#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"
#include "optima/potential.hpp"
#include "optima/specfun.hpp"

namespace optima {

struct YudinOptions {
  int max_degree = 64;
  /// Smallest cell width before the mesh check gives up on a region.
  double min_cell_width = 1e-24;
  /// Cells the interval [-1, 1) is cut into before adaptive refinement.
  int initial_cells = 32;
  /// Points where F - h may touch zero (interpolation nodes). They become
  /// mesh breakpoints, since a tangency inside a cell cannot be certified.
  std::vector<HighReal> breakpoints;
};

struct YudinMargins {
  /// Smallest alpha_k over k >= 1, and its index (-1 when h is constant).
  HighReal min_alpha = 0;
  int min_alpha_index = -1;
  /// Smallest certified lower bound for F - h over the mesh cells, where
  /// F(t) = f(2 - 2t)/2, and the left end of that cell.
  HighReal min_slack = 0;
  HighReal min_slack_at = 0;
  /// Tolerance granted to values that should vanish exactly.
  HighReal error_radius = 0;
  std::size_t cells = 0;
  /// Empty when valid; otherwise names the failed condition.
  std::string failure;
  std::optional<std::pair<HighReal, HighReal>> violation;
};

struct YudinResult {
  HighReal bound;
  bool valid = false;
  GegenbauerExpansion<HighReal> expansion;
  YudinMargins margins;
};

/// Checks alpha_k >= 0 (k >= 1) and h(t) <= f(2 - 2t)/2 on [-1, 1), and
/// returns bound = alpha_0 N^2 - h(1) N. For poly_in_t potentials the sign
/// condition is decided by exact root isolation; otherwise each mesh cell is
/// covered by a Taylor lower bound whose remainder is nonnegative because
/// every derivative of f(2 - 2t)/2 is.
YudinResult yudin_bound(int n, const Potential& f, const Polynomial<HighReal>& h, std::size_t count,
                        const YudinOptions& opt = {});
YudinResult yudin_bound(int n, const Potential& f, const Polynomial<Rational>& h, std::size_t count,
                        const YudinOptions& opt = {});

/// Unique polynomial of degree <= 2m - 1 matching F and F' at m nodes.
Polynomial<HighReal> hermite_interpolant(const Potential& f, const std::vector<HighReal>& nodes);

struct CertificateOptions {
  /// A certificate is sharp when |gap| <= sharp_tol * max(1, |energy|).
  double sharp_tol = 1e-9;
  double merge_tol = 1e-9;
  YudinOptions yudin;
};

struct SphericalCertificate {
  int dimension;
  std::size_t size;
  Potential potential;
  std::vector<HighReal> nodes;
  Polynomial<HighReal> h;
  GegenbauerExpansion<HighReal> expansion;
  /// F(t_i) - h(t_i) at each node.
  std::vector<HighReal> slack;
  HighReal bound;
  HighReal energy;
  HighReal gap;
  YudinMargins margins;
  int design_strength;
  bool sharp;
  int precision_digits = kHighDigits;

  HighReal bound_quadratic() const { return expansion[0]; }
  HighReal bound_linear() const { return -h(HighReal(1)); }
};

/// Hermite interpolation certificate for an m-distance set that is a
/// spherical (2m-1)-design. Throws PreconditionError when C does not qualify
/// or f is not completely monotonic, VerificationError when the resulting h
/// fails the Yudin conditions.
SphericalCertificate hermite_certificate(const Configuration& c, const Potential& f,
                                         const CertificateOptions& opt = {});

/// E_f(C) - bound(|C|); throws PreconditionError when h is not valid.
HighReal sharpness_gap(const Configuration& c, const Potential& f, const Polynomial<HighReal>& h,
                       const YudinOptions& opt = {});

}  // namespace optima
