#include "optima/specfun.hpp"

#include <string>
#include <type_traits>

#include "optima/errors.hpp"

namespace optima {

namespace {

void require_dimension(int n) {
  if (n < 2) throw DomainError("ultraspherical polynomials need dimension n >= 2, got " + std::to_string(n));
}

// gamma_k in the target arithmetic without a detour through GMP.
template <class T>
T recurrence_coefficient_as(int n, int k) {
  if constexpr (std::is_same_v<T, Rational>) {
    return gegenbauer_recurrence_coefficient(n, k);
  } else {
    if (k == 1) return T(1) / T(n);
    return T(k * (k + n - 3)) / T((2 * k + n - 2) * (2 * k + n - 4));
  }
}

}  // namespace

Rational gegenbauer_recurrence_coefficient(int n, int k) {
  require_dimension(n);
  if (k < 1) throw DomainError("recurrence coefficient index must be >= 1");
  // k = 1 is the removable 0/0 of the general formula when n = 2.
  if (k == 1) return Rational(1, n);
  return Rational(k * (k + n - 3), (2 * k + n - 2) * (2 * k + n - 4));
}

Polynomial<Rational> gegenbauer(int n, int k) {
  require_dimension(n);
  if (k < 0) throw DomainError("polynomial degree must be >= 0");
  Polynomial<Rational> prev = Polynomial<Rational>::constant(Rational(1));
  if (k == 0) return prev;
  const Polynomial<Rational> t = Polynomial<Rational>::monomial(1);
  Polynomial<Rational> cur = t;
  for (int j = 1; j < k; ++j) {
    Polynomial<Rational> next = t * cur - prev * gegenbauer_recurrence_coefficient(n, j);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class T>
std::vector<T> gegenbauer_values(int n, int kmax, const T& t) {
  require_dimension(n);
  if (kmax < 0) throw DomainError("polynomial degree must be >= 0");
  std::vector<T> v(static_cast<std::size_t>(kmax) + 1);
  v[0] = T(1);
  if (kmax >= 1) v[1] = t;
  for (int j = 1; j < kmax; ++j) {
    const T gamma = recurrence_coefficient_as<T>(n, j);
    v[static_cast<std::size_t>(j) + 1] = t * v[static_cast<std::size_t>(j)] - gamma * v[static_cast<std::size_t>(j) - 1];
  }
  return v;
}

template <class T>
GegenbauerExpansion<T>::GegenbauerExpansion(int dimension, std::vector<T> coeffs)
    : dimension_(dimension), coeffs_(std::move(coeffs)) {
  require_dimension(dimension);
  while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
}

template <class T>
Polynomial<T> GegenbauerExpansion<T>::to_monomial() const {
  Polynomial<T> p;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    p += gegenbauer(dimension_, static_cast<int>(k)).template cast<T>() * coeffs_[k];
  return p;
}

template <class T>
GegenbauerExpansion<T> expand(const Polynomial<T>& p, int n) {
  require_dimension(n);
  std::vector<T> alpha(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), T(0));
  std::vector<T> rest = p.coeffs();
  // Peel off leading terms; every P_k^n is monic.
  for (int k = p.degree(); k >= 0; --k) {
    const T a = rest[static_cast<std::size_t>(k)];
    alpha[static_cast<std::size_t>(k)] = a;
    if (a == T(0)) continue;
    const auto basis = gegenbauer(n, k);
    for (int j = 0; j <= k; ++j) rest[static_cast<std::size_t>(j)] -= a * convert<T>(basis.coeffs()[static_cast<std::size_t>(j)]);
    rest[static_cast<std::size_t>(k)] = T(0);
  }
  return GegenbauerExpansion<T>(n, std::move(alpha));
}

Polynomial<Rational> laguerre(int k, const Rational& alpha) {
  if (k < 0) throw DomainError("Laguerre degree must be >= 0");
  // L_k^{(a)}(v) = sum_i (-1)^i binom(k + a, k - i) v^i / i!
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Rational binom = 1;
    for (int j = 1; j <= k - i; ++j) binom *= (alpha + Rational(i + j)) / Rational(j);
    Rational fact = 1;
    for (int j = 2; j <= i; ++j) fact *= j;
    c[static_cast<std::size_t>(i)] = (i % 2 == 0 ? binom : Rational(-binom)) / fact;
  }
  return Polynomial<Rational>(std::move(c));
}

Polynomial<Rational> radial_eigen_polynomial(int n, int k) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  return laguerre(k, Rational(n, 2) - 1);
}

template <class T>
T fourier_eigenbasis_value(int n, int k, const T& r2) {
  using std::exp;
  if (r2 < T(0)) throw DomainError("squared radius must be nonnegative");
  const T two_pi = T(2) * pi<T>();
  return exp(-pi<T>() * r2) * radial_eigen_polynomial(n, k)(T(two_pi * r2));
}

template std::vector<double> gegenbauer_values<double>(int, int, const double&);
template std::vector<HighReal> gegenbauer_values<HighReal>(int, int, const HighReal&);
template std::vector<Rational> gegenbauer_values<Rational>(int, int, const Rational&);
template class GegenbauerExpansion<double>;
template class GegenbauerExpansion<HighReal>;
template class GegenbauerExpansion<Rational>;
template GegenbauerExpansion<double> expand<double>(const Polynomial<double>&, int);
template GegenbauerExpansion<HighReal> expand<HighReal>(const Polynomial<HighReal>&, int);
template GegenbauerExpansion<Rational> expand<Rational>(const Polynomial<Rational>&, int);
template double fourier_eigenbasis_value<double>(int, int, const double&);
template HighReal fourier_eigenbasis_value<HighReal>(int, int, const HighReal&);

}  // namespace optima
