#include "optima/lp_sphere.hpp"

#include <algorithm>
#include <cmath>

#include "optima/errors.hpp"
#include "optima/polynomial_roots.hpp"

namespace optima {

namespace {

HighReal factorial(int k) {
  HighReal r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

HighReal error_radius_for(const Polynomial<HighReal>& h) {
  HighReal scale = 1;
  for (const auto& c : h.coeffs()) scale += abs(c);
  return scale * pow(HighReal(10), -(kHighDigits - 30));
}

void check_alphas(const GegenbauerExpansion<HighReal>& ex, const HighReal& radius, YudinMargins& m, bool& valid) {
  for (int k = 1; k <= ex.degree(); ++k) {
    const HighReal a = ex[static_cast<std::size_t>(k)];
    if (m.min_alpha_index < 0 || a < m.min_alpha) {
      m.min_alpha = a;
      m.min_alpha_index = k;
    }
  }
  if (m.min_alpha_index >= 0 && m.min_alpha < -radius) {
    valid = false;
    m.failure = "alpha_" + std::to_string(m.min_alpha_index) + " = " + to_string(m.min_alpha, 12) + " < 0";
  }
}

// Lower bound of a0 + a1 u + q u^2 over [0, w].
HighReal quadratic_floor(const HighReal& a0, const HighReal& a1, const HighReal& q, const HighReal& w) {
  HighReal best = std::min(a0, a0 + a1 * w + q * w * w);
  if (q > 0) {
    const HighReal u = -a1 / (2 * q);
    if (u > 0 && u < w) best = std::min(best, a0 + a1 * u + q * u * u);
  }
  return best;
}

class MeshVerifier {
 public:
  MeshVerifier(const Potential& f, const Polynomial<HighReal>& h, const YudinOptions& opt, const HighReal& radius)
      : f_(f), opt_(opt), radius_(radius) {
    // Taylor order K: even and above deg h, so the K-th derivative of
    // F - h is F^(K) >= 0.
    order_ = std::max(h.degree() + 1, 2);
    if (order_ % 2) ++order_;
    for (int j = 0; j < order_; ++j) {
      derivs_.push_back(h.derivative(j));
      inv_fact_.push_back(1 / factorial(j));
    }
    h_ = h;
  }

  // Taylor coefficients of g = F - h at x, in the direction `sign` (+1 to
  // the right, -1 to the left).
  std::vector<HighReal> taylor(const HighReal& x, int sign) const {
    std::vector<HighReal> a(static_cast<std::size_t>(order_));
    for (int j = 0; j < order_; ++j) {
      HighReal v = (f_.half_form<HighReal>(x, j) - derivs_[static_cast<std::size_t>(j)](x)) * inv_fact_[static_cast<std::size_t>(j)];
      if (sign < 0 && j % 2) v = -v;
      a[static_cast<std::size_t>(j)] = v;
    }
    return a;
  }

  HighReal cell_floor(const std::vector<HighReal>& a, const HighReal& w) const {
    HighReal q = a.size() > 2 ? a[2] : HighReal(0);
    HighReal wp = w;
    for (std::size_t j = 3; j < a.size(); ++j) {
      const HighReal term = a[j] * wp;
      if (term < 0) q += term;
      wp *= w;
    }
    return quadratic_floor(a[0], a.size() > 1 ? a[1] : HighReal(0), q, w);
  }

  // Returns false and fills the violation on failure.
  bool verify(const HighReal& lo, const HighReal& hi, YudinMargins& m) {
    struct Cell {
      HighReal a, b;
    };
    std::vector<Cell> stack{{lo, hi}};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      const HighReal w = c.b - c.a;
      ++m.cells;
      const HighReal floor_left = cell_floor(taylor(c.a, +1), w);
      const HighReal floor_right = cell_floor(taylor(c.b, -1), w);
      const HighReal floor = std::max(floor_left, floor_right);
      if (floor >= -radius_) {
        if (!seen_ || floor < m.min_slack) {
          m.min_slack = floor;
          m.min_slack_at = c.a;
          seen_ = true;
        }
        continue;
      }
      const HighReal mid = (c.a + c.b) / 2;
      const HighReal gmid = f_.half_form<HighReal>(mid, 0) - h_(mid);
      if (gmid < -radius_ || w < HighReal(opt_.min_cell_width)) {
        m.violation = std::make_pair(c.a, c.b);
        m.min_slack = std::min(gmid, floor);
        m.min_slack_at = c.a;
        m.failure = "h(t) exceeds f(2-2t)/2 near t = " + to_string(mid, 12);
        return false;
      }
      stack.push_back({mid, c.b});
      stack.push_back({c.a, mid});
    }
    return true;
  }

  // [x, 1): F is nondecreasing, so F(x) >= h(x) + sum_j |h^(j)(x)| d^j / j!
  // bounds h from above by F on the whole tail.
  bool tail_holds(const HighReal& x) const {
    const HighReal d = 1 - x;
    HighReal upper = h_(x);
    HighReal dp = d;
    for (int j = 1; j <= h_.degree(); ++j) {
      upper += abs(h_.derivative(j)(x)) * inv_factorial(j) * dp;
      dp *= d;
    }
    return f_.half_form<HighReal>(x, 0) - upper >= -radius_;
  }

 private:
  HighReal inv_factorial(int j) const {
    return j < static_cast<int>(inv_fact_.size()) ? inv_fact_[static_cast<std::size_t>(j)] : 1 / factorial(j);
  }

  const Potential& f_;
  const YudinOptions& opt_;
  HighReal radius_;
  int order_;
  std::vector<Polynomial<HighReal>> derivs_;
  std::vector<HighReal> inv_fact_;
  Polynomial<HighReal> h_;
  bool seen_ = false;
};

YudinResult verify_common(int n, const Potential& f, const Polynomial<HighReal>& h,
                          const std::optional<Polynomial<Rational>>& exact_h,
                          std::optional<GegenbauerExpansion<HighReal>> expansion, std::size_t count,
                          const YudinOptions& opt) {
  if (n < 2) throw DomainError("yudin_bound needs n >= 2");
  if (h.degree() > opt.max_degree)
    throw PreconditionError("h has degree " + std::to_string(h.degree()) + " above the limit " +
                            std::to_string(opt.max_degree));
  YudinResult res{HighReal(0), true, expansion ? *expansion : expand<HighReal>(h, n), {}};
  YudinMargins& m = res.margins;
  m.error_radius = exact_h ? HighReal(0) : error_radius_for(h);
  check_alphas(res.expansion, m.error_radius, m, res.valid);
  const HighReal N(static_cast<unsigned long>(count));
  res.bound = res.expansion[0] * N * N - h(HighReal(1)) * N;
  if (!res.valid) return res;

  if (f.kind() == Potential::Kind::poly_in_t) {
    // F(t) = p(t)/2 exactly; decide the sign of F - h on [-1, 1] exactly.
    const Polynomial<Rational> hq = exact_h ? *exact_h : h.cast<Rational>();
    const Polynomial<Rational> g = f.polynomial() * Rational(1, 2) - hq;
    const SignCheck sc = check_sign(g, +1, Rational(-1), Rational(1));
    m.cells = 1;
    if (!sc.holds) {
      res.valid = false;
      m.failure = "h(t) exceeds f(2-2t)/2 on part of [-1, 1)";
      if (sc.violation) m.violation = std::make_pair(to_high(sc.violation->first), to_high(sc.violation->second));
      return res;
    }
    m.min_slack = HighReal(0);
    m.min_slack_at = HighReal(-1);
    HighReal best = to_high(g(Rational(-1)));
    for (int i = 0; i <= 64; ++i) {
      const Rational t = Rational(-1) + Rational(2 * i, 64);
      const HighReal v = to_high(g(t));
      if (v < best) {
        best = v;
        m.min_slack_at = to_high(t);
      }
    }
    m.min_slack = best;
    return res;
  }
  if (!f.half_form_derivatives_nonnegative())
    throw PreconditionError("mesh verification needs nonnegative derivatives of f(2-2t)/2");

  MeshVerifier mv(f, h, opt, m.error_radius);
  std::vector<HighReal> breaks;
  for (const auto& b : opt.breakpoints)
    if (b > -1 && b < 1) breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  // Tail [x, 1) handled by monotonicity; shrink toward 1 until it holds.
  HighReal x = HighReal(7) / 8;
  if (!breaks.empty()) x = std::max(x, (breaks.back() + 1) / 2);
  bool tail = false;
  for (int i = 0; i < 200 && !tail; ++i) {
    tail = mv.tail_holds(x);
    if (!tail) x = (x + 1) / 2;
  }
  if (!tail) {
    res.valid = false;
    m.failure = "h(t) is not dominated by f(2-2t)/2 as t approaches 1";
    m.violation = std::make_pair(x, HighReal(1));
    return res;
  }
  std::vector<HighReal> grid;
  const HighReal width = (x + 1) / opt.initial_cells;
  for (int i = 0; i < opt.initial_cells; ++i) grid.push_back(-1 + width * i);
  grid.push_back(x);
  grid.insert(grid.end(), breaks.begin(), breaks.end());
  std::sort(grid.begin(), grid.end());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i + 1] > grid[i])) continue;
    if (!mv.verify(grid[i], grid[i + 1], m)) {
      res.valid = false;
      return res;
    }
  }
  return res;
}

}  // namespace

YudinResult yudin_bound(int n, const Potential& f, const Polynomial<HighReal>& h, std::size_t count,
                        const YudinOptions& opt) {
  return verify_common(n, f, h, std::nullopt, std::nullopt, count, opt);
}

YudinResult yudin_bound(int n, const Potential& f, const Polynomial<Rational>& h, std::size_t count,
                        const YudinOptions& opt) {
  if (n < 2) throw DomainError("yudin_bound needs n >= 2");
  const GegenbauerExpansion<Rational> exact = expand<Rational>(h, n);
  std::vector<HighReal> alphas;
  for (const auto& a : exact.coeffs()) alphas.push_back(to_high(a));
  return verify_common(n, f, h.cast<HighReal>(), h, GegenbauerExpansion<HighReal>(n, std::move(alphas)), count, opt);
}

Polynomial<HighReal> hermite_interpolant(const Potential& f, const std::vector<HighReal>& nodes) {
  if (nodes.empty()) throw DomainError("Hermite interpolation needs at least one node");
  std::vector<HighReal> z;
  for (const auto& t : nodes) {
    z.push_back(t);
    z.push_back(t);
  }
  const std::size_t len = z.size();
  // Confluent divided differences, column by column.
  std::vector<HighReal> col(len);
  for (std::size_t i = 0; i < len; ++i) col[i] = f.half_form<HighReal>(z[i], 0);
  std::vector<HighReal> newton{col[0]};
  for (std::size_t j = 1; j < len; ++j) {
    std::vector<HighReal> next(len - j);
    for (std::size_t i = 0; i + j < len; ++i) {
      if (j == 1 && z[i] == z[i + 1]) next[i] = f.half_form<HighReal>(z[i], 1);
      else next[i] = (col[i + 1] - col[i]) / (z[i + j] - z[i]);
    }
    col = std::move(next);
    newton.push_back(col[0]);
  }
  Polynomial<HighReal> h;
  Polynomial<HighReal> basis = Polynomial<HighReal>::constant(HighReal(1));
  for (std::size_t j = 0; j < len; ++j) {
    h += basis * newton[j];
    basis = basis * Polynomial<HighReal>{-z[j], HighReal(1)};
  }
  return h;
}

SphericalCertificate hermite_certificate(const Configuration& c, const Potential& f, const CertificateOptions& opt) {
  if (!f.completely_monotonic())
    throw PreconditionError("certificates need a completely monotonic potential (inverse-power or gaussian)");
  const int n = c.dimension();
  if (n < 2) throw PreconditionError("certificates need dimension >= 2");
  const InnerProductSpectrum spec = inner_product_spectrum(c, opt.merge_tol);
  const int m = spec.m;
  if (m < 1) throw PreconditionError("configuration has a single point");
  const int strength = design_strength(c, 2 * m - 1);
  if (strength < 2 * m - 1)
    throw PreconditionError(std::to_string(m) + "-distance set is only a spherical " + std::to_string(strength) +
                            "-design; a " + std::to_string(2 * m - 1) + "-design is required");

  Polynomial<HighReal> h = hermite_interpolant(f, spec.values);
  YudinOptions yopt = opt.yudin;
  yopt.breakpoints.insert(yopt.breakpoints.end(), spec.values.begin(), spec.values.end());
  YudinResult yr = yudin_bound(n, f, h, c.size(), yopt);
  if (!yr.valid) throw VerificationError("Hermite interpolant fails the Yudin conditions: " + yr.margins.failure);

  std::vector<HighReal> slack;
  for (const auto& t : spec.values) slack.push_back(f.half_form<HighReal>(t, 0) - h(t));
  const HighReal e = energy(c, f);
  const HighReal gap = e - yr.bound;
  const bool sharp = abs(gap) <= HighReal(opt.sharp_tol) * std::max(HighReal(1), abs(e));
  return SphericalCertificate{n,       c.size(),  f,         spec.values, std::move(h), std::move(yr.expansion),
                              std::move(slack), yr.bound, e, gap, std::move(yr.margins), strength, sharp};
}

HighReal sharpness_gap(const Configuration& c, const Potential& f, const Polynomial<HighReal>& h,
                       const YudinOptions& opt) {
  YudinOptions yopt = opt;
  if (yopt.breakpoints.empty()) {
    const InnerProductSpectrum spec = inner_product_spectrum(c);
    yopt.breakpoints = spec.values;
  }
  const YudinResult yr = yudin_bound(c.dimension(), f, h, c.size(), yopt);
  if (!yr.valid) throw PreconditionError("auxiliary polynomial is not valid: " + yr.margins.failure);
  return energy(c, f) - yr.bound;
}

}  // namespace optima
