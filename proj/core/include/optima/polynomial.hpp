#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "optima/numeric.hpp"

namespace optima {

/// Univariate polynomial in the monomial basis, coefficients stored from the
/// constant term upward. Trailing zero coefficients are trimmed so that the
/// leading coefficient is nonzero unless the polynomial is zero.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  static Polynomial monomial(int k, const T& c = T(1)) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<T>& coeffs() const { return coeffs_; }

  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Horner evaluation; the argument type may differ from the coefficient type.
  template <class U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<U>(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

  /// p(a*x + b).
  Polynomial compose_affine(const T& a, const T& b) const {
    Polynomial result;
    const Polynomial lin{b, a};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      result = result * lin + Polynomial::constant(*it);
    return result;
  }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(convert<U>(c));
    return Polynomial<U>(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  Polynomial& operator/=(const T& s) {
    for (auto& c : coeffs_) c /= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const T& s) { return a /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  const T lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const T c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

}  // namespace optima
