#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "optima/numeric.hpp"
#include "optima/polynomial.hpp"

namespace optima {

using RationalPolynomial = Polynomial<Rational>;

/// Monic greatest common divisor over Q (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Product of the distinct irreducible factors of p.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Product of the square-free factors of p that occur with odd multiplicity.
/// Its real roots are exactly the points where p changes sign.
RationalPolynomial odd_multiplicity_part(const RationalPolynomial& p);

/// Sturm chain of a square-free polynomial, each member scaled to a
/// primitive integer polynomial by a positive factor.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& squarefree);

  /// Sign variations at x (zeros skipped).
  int variations_at(const Rational& x) const;
  /// Sign variations at +infinity (or -infinity when positive == false).
  int variations_at_infinity(bool positive) const;

  /// Number of distinct roots in (lo, hi]; hi == nullopt means +infinity.
  int count_roots(const Rational& lo, const std::optional<Rational>& hi) const;

  const std::vector<RationalPolynomial>& chain() const { return chain_; }

 private:
  std::vector<RationalPolynomial> chain_;
};

/// Cauchy bound: every real root has absolute value below the result.
Rational root_bound(const RationalPolynomial& p);

/// Disjoint half-open intervals (a, b], each holding exactly one distinct
/// real root of p inside (lo, hi], refined to width <= max_width.
std::vector<std::pair<Rational, Rational>> isolate_roots(const RationalPolynomial& p,
                                                         const Rational& lo,
                                                         const std::optional<Rational>& hi,
                                                         const Rational& max_width);

/// Result of an exact sign check on an interval.
struct SignCheck {
  bool holds = true;
  /// Bracket around the first place the required sign is violated.
  std::optional<std::pair<Rational, Rational>> violation;
};

/// Decides exactly whether required_sign * p(x) >= 0 on [lo, hi]
/// (hi == nullopt means [lo, +infinity)).
SignCheck check_sign(const RationalPolynomial& p, int required_sign, const Rational& lo,
                     const std::optional<Rational>& hi);

}  // namespace optima
