#include "optima/polynomial_roots.hpp"

#include <boost/multiprecision/integer.hpp>

namespace optima {

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

RationalPolynomial make_monic(RationalPolynomial p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

// Positive rescaling to a primitive integer polynomial.
RationalPolynomial primitive(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs())
    if (c != 0) den_lcm = boost::multiprecision::lcm(den_lcm, Integer(boost::multiprecision::denominator(c)));
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    Integer v = Integer(boost::multiprecision::numerator(c * Rational(den_lcm)));
    num_gcd = boost::multiprecision::gcd(num_gcd, v);
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  return p * Rational(den_lcm, num_gcd);
}

RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divmod(a, b).first;
}

}  // namespace

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(primitive(r));
  }
  return make_monic(a);
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : RationalPolynomial::constant(Rational(1));
  return make_monic(exact_quotient(p, gcd(p, p.derivative())));
}

RationalPolynomial odd_multiplicity_part(const RationalPolynomial& p) {
  RationalPolynomial result = RationalPolynomial::constant(Rational(1));
  if (p.degree() <= 0) return result;
  // Yun's square-free factorization.
  RationalPolynomial a0 = gcd(p, p.derivative());
  RationalPolynomial b = exact_quotient(p, a0);
  RationalPolynomial c = exact_quotient(p.derivative(), a0);
  RationalPolynomial d = c - b.derivative();
  int multiplicity = 1;
  while (b.degree() > 0) {
    RationalPolynomial a = gcd(b, d);
    if (multiplicity % 2 == 1) result = result * a;
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    ++multiplicity;
  }
  return make_monic(result);
}

SturmSequence::SturmSequence(const RationalPolynomial& squarefree) {
  if (squarefree.is_zero()) return;
  chain_.push_back(primitive(squarefree));
  if (squarefree.degree() == 0) return;
  chain_.push_back(primitive(squarefree.derivative()));
  while (chain_.back().degree() > 0) {
    auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(primitive(-r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_of(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count_roots(const Rational& lo, const std::optional<Rational>& hi) const {
  const int v_hi = hi ? variations_at(*hi) : variations_at_infinity(true);
  return variations_at(lo) - v_hi;
}

Rational root_bound(const RationalPolynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coeffs()[static_cast<std::size_t>(k)] / lead;
    if (r < 0) r = -r;
    if (r > m) m = r;
  }
  return Rational(1) + m;
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const RationalPolynomial& p,
                                                         const Rational& lo,
                                                         const std::optional<Rational>& hi,
                                                         const Rational& max_width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  const RationalPolynomial sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  Rational upper = hi ? *hi : root_bound(sf);
  if (upper < lo) return out;
  // Depth-first bisection keeps the output sorted left to right.
  std::vector<std::pair<Rational, Rational>> stack{{lo, upper}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int count = sturm.count_roots(a, b);
    if (count == 0) continue;
    if (count == 1 && b - a <= max_width) {
      out.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  return out;
}

SignCheck check_sign(const RationalPolynomial& p, int required_sign, const Rational& lo,
                     const std::optional<Rational>& hi) {
  SignCheck result;
  if (p.is_zero()) return result;
  const RationalPolynomial odd = odd_multiplicity_part(p);
  const RationalPolynomial sf = squarefree_part(p);
  const SturmSequence sturm_sf(sf);

  // Sign of p just to the right of lo.
  Rational probe = lo;
  if (p(lo) == 0) {
    Rational width = hi ? (*hi - lo) : Rational(1);
    if (width <= 0) return result;
    while (sturm_sf.count_roots(lo, lo + width) > 0) width /= 2;
    probe = lo + width;
  }
  if (sign_of(p(probe)) * required_sign < 0) {
    result.holds = false;
    result.violation = std::make_pair(lo, probe);
    return result;
  }
  if (odd.degree() <= 0) return result;

  // Any odd-multiplicity root strictly inside (lo, hi) flips the sign.
  const SturmSequence sturm_odd(odd);
  int inside = sturm_odd.count_roots(lo, hi);
  if (hi && odd(*hi) == 0) --inside;
  if (inside > 0) {
    result.holds = false;
    auto roots = isolate_roots(odd, lo, hi, Rational(1, 1000000));
    if (!roots.empty()) result.violation = roots.front();
  }
  return result;
}

}  // namespace optima
