#pragma once

#include <span>
#include <string>
#include <string_view>

#include "optima/config.hpp"
#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"

namespace optima {

/// Pair potential f(r2) of the squared distance r2 in (0, 4].
///
/// Spec strings: "inverse-power:s=0.5", "gaussian:c=1.0", "log",
/// "poly-t:[c0,c1,...]" (a polynomial in t = 1 - r2/2) and "coulomb",
/// an alias for inverse-power:s=0.5 (1/r in Euclidean distance).
class Potential {
 public:
  enum class Kind { inverse_power, gaussian, log, poly_in_t };

  /// f(r2) = r2^{-s}, s > 0.
  static Potential inverse_power(const HighReal& s);
  /// f(r2) = exp(-c r2), c > 0.
  static Potential gaussian(const HighReal& c);
  /// f(r2) = -(1/2) log r2, i.e. -log of the Euclidean distance.
  static Potential logarithmic();
  /// f(r2) = p(1 - r2/2).
  static Potential poly_in_t(Polynomial<Rational> p);

  static Potential parse(std::string_view spec);

  Kind kind() const { return kind_; }
  const HighReal& parameter() const { return param_; }
  const Polynomial<Rational>& polynomial() const { return poly_; }
  std::string spec() const;

  /// inverse_power and gaussian: (-1)^k f^(k) >= 0 for all k on (0, 4].
  bool completely_monotonic() const { return kind_ == Kind::inverse_power || kind_ == Kind::gaussian; }

  /// Every derivative of order >= 1 of F(t) = f(2-2t)/2 is nonnegative on
  /// [-1, 1); true for the analytic kinds (inverse_power, gaussian, log).
  bool half_form_derivatives_nonnegative() const { return kind_ != Kind::poly_in_t; }

  /// f(r2). Throws DomainError outside (0, 4].
  template <class T>
  T value(const T& r2) const {
    return derivative(r2, 0);
  }

  /// d^order f / d r2^order at r2.
  template <class T>
  T derivative(const T& r2, int order) const;

  /// d^order/dt^order of F(t) = f(2 - 2t)/2.
  template <class T>
  T half_form(const T& t, int order = 0) const;

 private:
  Potential(Kind kind, HighReal param, Polynomial<Rational> poly);

  Kind kind_;
  HighReal param_;
  double param_d_;
  Polynomial<Rational> poly_;
};

/// E_f(C) = (1/2) sum over ordered pairs x != y of f(|x - y|^2).
HighReal energy(const Configuration& c, const Potential& f);

/// The same energy through the distance distribution:
/// sum over t < 1 of f(2 - 2t)/2 * A_t.
HighReal energy(const DistanceDistribution& dist, const Potential& f);

/// Double-precision energy of row-major coordinates.
double energy(int dimension, std::span<const double> coords, const Potential& f);

}  // namespace optima
