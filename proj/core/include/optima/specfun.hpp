#pragma once

#include <vector>

#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"

namespace optima {

/// Coefficient gamma_k in the monic three-term recurrence
/// P_{k+1}(t) = t P_k(t) - gamma_k P_{k-1}(t) for the ultraspherical
/// polynomials orthogonal under (1 - t^2)^{(n-3)/2} on [-1, 1].
/// Requires n >= 2 and k >= 1.
Rational gegenbauer_recurrence_coefficient(int n, int k);

/// Monic degree-k ultraspherical polynomial P_k^n with exact coefficients.
/// Throws DomainError for n < 2 or k < 0.
Polynomial<Rational> gegenbauer(int n, int k);

/// Values P_0^n(t), ..., P_kmax^n(t) by the recurrence.
template <class T>
std::vector<T> gegenbauer_values(int n, int kmax, const T& t);

/// P_k^n(t) by the recurrence.
template <class T>
T gegenbauer_value(int n, int k, const T& t) {
  return gegenbauer_values<T>(n, k, t).back();
}

/// Coefficients of a polynomial in the basis P_0^n, P_1^n, ... .
template <class T>
class GegenbauerExpansion {
 public:
  GegenbauerExpansion(int dimension, std::vector<T> coeffs);

  int dimension() const { return dimension_; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  /// alpha_k, zero past the stored range.
  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  /// Index of the last nonzero coefficient (-1 when all vanish).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Polynomial<T> to_monomial() const;

 private:
  int dimension_;
  std::vector<T> coeffs_;
};

/// Re-expands p in the monic ultraspherical basis for dimension n.
template <class T>
GegenbauerExpansion<T> expand(const Polynomial<T>& p, int n);

/// Generalized Laguerre polynomial L_k^{(alpha)} with exact coefficients.
Polynomial<Rational> laguerre(int k, const Rational& alpha);

/// Polynomial part of the k-th radial Fourier eigenfunction in R^n as a
/// function of v = 2*pi*|x|^2, i.e. L_k^{(n/2-1)}(v).
Polynomial<Rational> radial_eigen_polynomial(int n, int k);

/// b_k(r2) = exp(-pi r2) L_k^{(n/2-1)}(2 pi r2): the n-dimensional Fourier
/// transform of b_k(|x|^2) is transform_parity(k) * b_k(|t|^2).
template <class T>
T fourier_eigenbasis_value(int n, int k, const T& r2);

/// Eigenvalue (+1 or -1) of b_k under the Fourier transform.
inline int transform_parity(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace optima
