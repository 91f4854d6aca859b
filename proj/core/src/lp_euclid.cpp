#include "optima/lp_euclid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <gsl/gsl_multimin.h>

#include "optima/errors.hpp"
#include "optima/polynomial_roots.hpp"
#include "optima/specfun.hpp"

namespace optima {

namespace {

using HighMatrix = Eigen::Matrix<HighReal, Eigen::Dynamic, Eigen::Dynamic>;
using HighVector = Eigen::Matrix<HighReal, Eigen::Dynamic, 1>;

// L_0^{(a)}(v), ..., L_d^{(a)}(v) by the three-term recurrence.
template <class T>
std::vector<T> laguerre_values(int d, const T& a, const T& v) {
  std::vector<T> l(static_cast<std::size_t>(d) + 1);
  l[0] = T(1);
  if (d >= 1) l[1] = T(1) + a - v;
  for (int k = 1; k < d; ++k)
    l[static_cast<std::size_t>(k) + 1] =
        ((T(2 * k + 1) + a - v) * l[static_cast<std::size_t>(k)] - (T(k) + a) * l[static_cast<std::size_t>(k) - 1]) /
        T(k + 1);
  return l;
}

// d/dv L_k^{(a)} = -L_{k-1}^{(a+1)}.
template <class T>
std::vector<T> laguerre_derivatives(int d, const T& a, const T& v) {
  std::vector<T> out(static_cast<std::size_t>(d) + 1, T(0));
  if (d == 0) return out;
  const std::vector<T> l = laguerre_values<T>(d - 1, a + 1, v);
  for (int k = 1; k <= d; ++k) out[static_cast<std::size_t>(k)] = -l[static_cast<std::size_t>(k) - 1];
  return out;
}

HighReal half_dim(int n) { return HighReal(n) / 2; }

Polynomial<HighReal> combine(int n, const std::vector<HighReal>& c, bool alternate) {
  Polynomial<HighReal> p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    HighReal ck = c[k];
    if (alternate && k % 2) ck = -ck;
    p += radial_eigen_polynomial(n, static_cast<int>(k)).cast<HighReal>() * ck;
  }
  return p;
}

Polynomial<Rational> combine_exact(int n, const std::vector<HighReal>& c, bool alternate) {
  Polynomial<Rational> p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Rational ck = to_rational(c[k]);
    if (alternate && k % 2) ck = -ck;
    p += radial_eigen_polynomial(n, static_cast<int>(k)) * ck;
  }
  return p;
}

HighReal ball_volume_high(int n, const HighReal& r) {
  return pow(pi<HighReal>(), half_dim(n)) / boost::multiprecision::tgamma(half_dim(n) + 1) * pow(r, n);
}

HighReal r2_from_v(const Rational& v, const HighReal& scale2) { return to_high(v) * scale2 / (2 * pi<HighReal>()); }

}  // namespace

HighReal RadialAux::value(const HighReal& r2) const {
  const HighReal v = 2 * pi<HighReal>() * r2 / (scale * scale);
  const auto l = laguerre_values<HighReal>(degree(), half_dim(dimension) - 1, v);
  HighReal s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * l[k];
  return exp(-v / 2) * s;
}

HighReal RadialAux::transform_value(const HighReal& r2) const {
  const HighReal v = 2 * pi<HighReal>() * r2 * scale * scale;
  const auto l = laguerre_values<HighReal>(degree(), half_dim(dimension) - 1, v);
  HighReal s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += (k % 2 ? -coeffs[k] : coeffs[k]) * l[k];
  return pow(scale, dimension) * exp(-v / 2) * s;
}

HighReal RadialAux::value_at_zero() const { return value(HighReal(0)); }
HighReal RadialAux::transform_at_zero() const { return transform_value(HighReal(0)); }

RadialAux RadialAux::transformed() const {
  RadialAux t = *this;
  const HighReal factor = pow(scale, dimension);
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) t.coeffs[k] = (k % 2 ? -coeffs[k] : coeffs[k]) * factor;
  t.scale = 1 / scale;
  return t;
}

RadialAux RadialAux::rescaled(const HighReal& lambda) const {
  if (!(lambda > 0)) throw DomainError("rescaling factor must be positive");
  RadialAux t = *this;
  t.r_min *= lambda;
  t.scale *= lambda;
  return t;
}

Polynomial<HighReal> RadialAux::f_polynomial() const { return combine(dimension, coeffs, false); }
Polynomial<HighReal> RadialAux::transform_polynomial() const { return combine(dimension, coeffs, true); }

EuclidResult verify_and_bound(const RadialAux& aux) {
  if (aux.dimension < 1) throw DomainError("aux dimension must be >= 1");
  if (aux.coeffs.empty()) throw DomainError("aux has no coefficients");
  if (!(aux.r_min > 0) || !(aux.scale > 0)) throw DomainError("aux r_min and scale must be positive");
  EuclidResult res;
  EuclidMargins& m = res.margins;
  m.f0 = aux.value_at_zero();
  m.fhat0 = aux.transform_at_zero();
  if (m.fhat0 == 0) throw PreconditionError("aux has vanishing Fourier transform at 0");
  res.density_bound = ball_volume_high(aux.dimension, aux.r_min / (2 * aux.scale)) *
                      aux.f_polynomial()(HighReal(0)) / aux.transform_polynomial()(HighReal(0));

  const HighReal scale2 = aux.scale * aux.scale;
  const HighReal v_exact = 2 * pi<HighReal>() * aux.r_min * aux.r_min / scale2;
  m.v_min = to_rational(v_exact * (1 - pow(HighReal(10), -(kHighDigits - 20))));
  res.valid = true;
  if (!(m.fhat0 > 0)) {
    res.valid = false;
    m.failure = "f^(0) <= 0";
    return res;
  }
  const Polynomial<Rational> p = combine_exact(aux.dimension, aux.coeffs, false);
  const SignCheck fs = check_sign(p, -1, m.v_min, std::nullopt);
  if (!fs.holds) {
    res.valid = false;
    m.failure = "f(x) > 0 somewhere with |x| >= r_min";
    if (fs.violation)
      m.violation = std::make_pair(r2_from_v(fs.violation->first, scale2),
                                   std::optional<HighReal>(r2_from_v(fs.violation->second, scale2)));
    return res;
  }
  const Polynomial<Rational> q = combine_exact(aux.dimension, aux.coeffs, true);
  const SignCheck qs = check_sign(q, +1, Rational(0), std::nullopt);
  if (!qs.holds) {
    res.valid = false;
    m.failure = "f^(t) < 0 somewhere";
    if (qs.violation) {
      const HighReal inv = 1 / scale2;
      m.violation = std::make_pair(r2_from_v(qs.violation->first, inv),
                                   std::optional<HighReal>(r2_from_v(qs.violation->second, inv)));
    }
    return res;
  }
  return res;
}

namespace {

// |f| <= exp(-v/2) sum_j |a_j| v^j, with v = 2 pi r2 / s^2. Shell-by-shell
// tail bound over lattice points with |x|^2 > t.
double radial_tail_bound(const Polynomial<HighReal>& p, double s2, int n, double lambda, double t, double prefactor) {
  std::vector<double> absc;
  for (const auto& c : p.coeffs()) absc.push_back(std::abs(to_double(c)));
  auto envelope = [&](double v) {
    double acc = 0;
    for (auto it = absc.rbegin(); it != absc.rend(); ++it) acc = acc * v + *it;
    return acc;
  };
  const double r0 = std::sqrt(t);
  double total = 0;
  for (int k = 0; k < 100000; ++k) {
    const double inner = r0 + k * lambda;
    const double outer = inner + lambda;
    const double term = lattice_point_count_bound(n, outer, lambda) *
                        std::exp(-pi<double>() * inner * inner / s2) * envelope(2 * pi<double>() * outer * outer / s2);
    total += term;
    if (k > 4 && term < 1e-30 * std::max(total, 1e-300)) break;
  }
  return prefactor * total;
}

// Distinct squared lengths with their multiplicities.
std::map<long long, std::pair<double, std::uint64_t>> shells(const Lattice& l, double r2) {
  std::map<long long, std::pair<double, std::uint64_t>> out;
  EnumerationOptions opt;
  opt.include_zero = true;
  for_each_vector(l, r2, opt, [&](const std::vector<std::int64_t>&, double norm2) {
    auto& e = out[std::llround(norm2 * 1e8)];
    e.first = norm2;
    ++e.second;
  });
  return out;
}

}  // namespace

PoissonBoundReport lattice_poisson_bound_check(const Lattice& l, const RadialAux& aux) {
  if (l.dimension() != aux.dimension) throw PreconditionError("lattice and aux dimensions differ");
  const EuclidResult check = verify_and_bound(aux);
  if (!check.valid) throw PreconditionError("aux is not valid: " + check.margins.failure);
  const double lambda = std::sqrt(minimal_norm(l));
  if (lambda < to_double(aux.r_min) * (1 - 1e-12))
    throw PreconditionError("lattice minimal length is below r_min; rescale the lattice first");
  const Lattice d = dual(l);
  const double lambda_dual = std::sqrt(minimal_norm(d));
  const int n = l.dimension();
  const double s2 = to_double(aux.scale * aux.scale);
  const Polynomial<HighReal> p = aux.f_polynomial();
  const Polynomial<HighReal> q = aux.transform_polynomial();
  const double sn = std::pow(std::sqrt(s2), n);

  PoissonBoundReport rep{};
  rep.f0 = check.margins.f0;
  rep.fhat0 = check.margins.fhat0;
  rep.covolume = l.covolume();
  const double target = 1e-12 * std::max(1.0, std::abs(to_double(rep.f0)));
  // Separate radii: the two Gaussians decay at different rates.
  auto radius_for = [&](const std::function<double(double)>& tail, double lam, double& bound) {
    double t = 4 * lam * lam;
    for (int i = 0; i < 200; ++i, t *= 1.25) {
      bound = tail(t);
      if (bound <= target) return t;
    }
    throw TruncationError("no truncation radius reaches the tail target", t);
  };
  rep.trunc_r2 = radius_for([&](double t) { return radial_tail_bound(p, s2, n, lambda, t, 1.0); }, lambda, rep.tail_f);
  rep.trunc_r2_dual = radius_for([&](double t) { return radial_tail_bound(q, 1 / s2, n, lambda_dual, t, sn); },
                                 lambda_dual, rep.tail_fhat);
  rep.sum_f = 0;
  for (const auto& [key, shell] : shells(l, rep.trunc_r2))
    rep.sum_f += aux.value(HighReal(shell.first)) * HighReal(shell.second);
  rep.sum_fhat = 0;
  for (const auto& [key, shell] : shells(d, rep.trunc_r2_dual))
    rep.sum_fhat += aux.transform_value(HighReal(shell.first)) * HighReal(shell.second);
  rep.primal_ok = rep.sum_f <= rep.f0 + HighReal(rep.tail_f);
  rep.dual_ok = rep.sum_fhat >= rep.fhat0 - HighReal(rep.tail_fhat);
  rep.volume_ok = rep.f0 >= rep.fhat0 / HighReal(rep.covolume);
  rep.slack = rep.f0 * HighReal(rep.covolume) / rep.fhat0 - 1;
  return rep;
}

AuxStrategy parse_aux_strategy(const std::string& name) {
  if (name == "forced_roots" || name == "forced-roots") return AuxStrategy::forced_roots;
  if (name == "nelder_mead" || name == "nelder-mead") return AuxStrategy::nelder_mead;
  if (name == "hybrid") return AuxStrategy::hybrid;
  throw ParseError("unknown strategy '" + name + "' (expected forced-roots, nelder-mead, hybrid)");
}

std::string to_string(AuxStrategy s) {
  switch (s) {
    case AuxStrategy::forced_roots:
      return "forced-roots";
    case AuxStrategy::nelder_mead:
      return "nelder-mead";
    case AuxStrategy::hybrid:
      return "hybrid";
  }
  return "hybrid";
}

namespace {

Lattice reference_lattice(int n) {
  if (n == 1) return zn(1);
  if (n == 2) return hexagonal();
  if (n == 8) return e8();
  return dn(n);
}

// First `count` distinct nonzero squared lengths of L scaled to covolume 1.
std::vector<double> unit_covolume_shells(const Lattice& l, std::size_t count) {
  const double factor = std::pow(l.covolume(), -2.0 / l.dimension());
  const double m = minimal_norm(l);
  double r2 = m * (count + 1);
  for (;;) {
    std::vector<double> out;
    for (const auto& [key, shell] : shells(l, r2))
      if (shell.first > 1e-9) out.push_back(shell.first * factor);
    if (out.size() >= count) {
      out.resize(count);
      return out;
    }
    r2 *= 1.5;
  }
}

struct Candidate {
  std::vector<HighReal> coeffs;
  HighReal bound;  // in natural units
  bool ok = false;
};

class ForcedRootProblem {
 public:
  ForcedRootProblem(int n, int d, double rho2) : n_(n), d_(d), alpha_(half_dim(n) - 1), rho2_(rho2) {
    q0_ = laguerre_values<HighReal>(d_, alpha_, HighReal(0));
  }

  Candidate solve(const std::vector<double>& froots, const std::vector<double>& groots) const {
    const int size = d_ + 1;
    if (static_cast<int>(2 * (froots.size() + groots.size()) + 2) != size)
      throw DomainError("forced root count does not match the degree");
    HighMatrix a(size, size);
    HighVector b(size);
    const HighReal two_pi = 2 * pi<HighReal>();
    const HighReal eta = pow(HighReal(10), -30);
    int row = 0;
    auto put = [&](const std::vector<HighReal>& vals, bool alternate, const HighReal& rhs) {
      for (int k = 0; k < size; ++k) {
        const HighReal& x = vals[static_cast<std::size_t>(k)];
        a(row, k) = alternate && k % 2 ? HighReal(-x) : x;
      }
      b(row) = rhs;
      ++row;
    };
    const HighReal v0 = two_pi * rho2_;
    put(laguerre_values<HighReal>(d_, alpha_, v0), false, -eta);
    for (double r2 : froots) {
      const HighReal v = two_pi * HighReal(r2);
      put(laguerre_values<HighReal>(d_, alpha_, v), false, -eta);
      put(laguerre_derivatives<HighReal>(d_, alpha_, v), false, HighReal(0));
    }
    for (double r2 : groots) {
      const HighReal v = two_pi * HighReal(r2);
      put(laguerre_values<HighReal>(d_, alpha_, v), true, eta);
      put(laguerre_derivatives<HighReal>(d_, alpha_, v), true, HighReal(0));
    }
    put(q0_, true, HighReal(1));
    Candidate c;
    Eigen::FullPivLU<HighMatrix> lu(a);
    if (!lu.isInvertible()) return c;
    const HighVector x = lu.solve(b);
    c.coeffs.assign(x.data(), x.data() + size);
    HighReal f0 = 0;
    for (int k = 0; k < size; ++k) f0 += c.coeffs[static_cast<std::size_t>(k)] * q0_[static_cast<std::size_t>(k)];
    // f^(0) = 1, so the bound is vol(B(rho/2)) f(0).
    c.bound = ball_volume_high(n_, sqrt(HighReal(rho2_)) / 2) * f0;
    c.ok = c.coeffs.back() > 0;
    return c;
  }

  // Cheap sign screen on a grid (double precision).
  double grid_violation(const Candidate& c, double vmax) const {
    std::vector<double> cd;
    double scale = 0;
    for (const auto& x : c.coeffs) {
      cd.push_back(to_double(x));
      scale = std::max(scale, std::abs(cd.back()));
    }
    const double a = to_double(alpha_);
    const double v0 = 2 * pi<double>() * rho2_;
    double worst = 0;
    constexpr int kPoints = 500;
    for (int i = 0; i <= kPoints; ++i) {
      const double vf = v0 + (vmax - v0) * i / kPoints;
      const double vq = vmax * i / kPoints;
      const auto lf = laguerre_values<double>(d_, a, vf);
      const auto lq = laguerre_values<double>(d_, a, vq);
      double p = 0;
      double q = 0;
      for (int k = 0; k <= d_; ++k) {
        p += cd[static_cast<std::size_t>(k)] * lf[static_cast<std::size_t>(k)];
        q += (k % 2 ? -1 : 1) * cd[static_cast<std::size_t>(k)] * lq[static_cast<std::size_t>(k)];
      }
      worst = std::max({worst, p * std::exp(-vf / 2), -q * std::exp(-vq / 2)});
    }
    return worst / scale;
  }

  int degree() const { return d_; }
  double rho2() const { return rho2_; }

 private:
  int n_;
  int d_;
  HighReal alpha_;
  double rho2_;
  std::vector<HighReal> q0_;
};

RadialAux to_unit_rmin(int n, const std::vector<HighReal>& coeffs, double rho2) {
  RadialAux aux;
  aux.dimension = n;
  aux.r_min = 1;
  aux.scale = 1 / sqrt(HighReal(rho2));
  aux.coeffs = coeffs;
  return aux;
}

struct PolishContext {
  const ForcedRootProblem* problem;
  std::size_t nf;
  double vmax;
  int evaluations = 0;
};

double polish_objective(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<PolishContext*>(params);
  ++ctx->evaluations;
  std::vector<double> f;
  std::vector<double> g;
  const double rho2 = ctx->problem->rho2();
  for (std::size_t i = 0; i < x->size; ++i) {
    const double r = gsl_vector_get(x, i);
    if (!(r > (i < ctx->nf ? rho2 : 0.0))) return 1e6;
    (i < ctx->nf ? f : g).push_back(r);
  }
  const Candidate c = ctx->problem->solve(f, g);
  if (!c.ok) return 1e6;
  const double viol = ctx->problem->grid_violation(c, ctx->vmax);
  const double bound = to_double(c.bound);
  if (viol > 1e-14) return 1e3 * (1 + viol) + std::abs(bound);
  return bound;
}

}  // namespace

double natural_min_norm(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  const Lattice l = reference_lattice(n);
  return minimal_norm(l) * std::pow(l.covolume(), -2.0 / n);
}

OptimizedAux optimize_aux(const OptimizeOptions& opt) {
  const int n = opt.dimension;
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (opt.degree < 1) throw DomainError("degree must be >= 1");
  int d = opt.degree % 2 ? opt.degree : opt.degree - 1;
  if (opt.f_roots || opt.fhat_roots) {
    const std::size_t forced = (opt.f_roots ? opt.f_roots->size() : 0) + (opt.fhat_roots ? opt.fhat_roots->size() : 0);
    d = static_cast<int>(2 * forced + 1);
    if (d > opt.degree && opt.degree % 2 == 1)
      throw DomainError("forced roots need degree " + std::to_string(d) + " > " + std::to_string(opt.degree));
  }
  const int half = (d - 1) / 2;
  const Lattice ref = reference_lattice(n);
  const double rho2 = natural_min_norm(n);
  const ForcedRootProblem problem(n, d, rho2);

  // Candidate root sets: explicit ones, or every split of the lattice shells.
  std::vector<std::pair<std::vector<double>, std::vector<double>>> splits;
  if (opt.f_roots || opt.fhat_roots) {
    splits.emplace_back(opt.f_roots.value_or(std::vector<double>{}), opt.fhat_roots.value_or(std::vector<double>{}));
  } else {
    const std::vector<double> fs = unit_covolume_shells(ref, static_cast<std::size_t>(half) + 1);
    const std::vector<double> gs = unit_covolume_shells(dual(ref), static_cast<std::size_t>(half) + 1);
    for (int a = 0; a <= half; ++a) {
      // f keeps its sign change at the first shell; double roots follow.
      std::vector<double> fr(fs.begin() + 1, fs.begin() + 1 + a);
      std::vector<double> gr(gs.begin(), gs.begin() + (half - a));
      splits.emplace_back(std::move(fr), std::move(gr));
    }
  }
  if (opt.strategy == AuxStrategy::nelder_mead) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    for (auto& [fr, gr] : splits) {
      for (auto& r : fr) r *= 1 + jitter(rng);
      for (auto& r : gr) r *= 1 + jitter(rng);
    }
  }
  auto vmax_for = [&](const std::vector<double>& fr, const std::vector<double>& gr) {
    double top = rho2;
    for (double r : fr) top = std::max(top, r);
    for (double r : gr) top = std::max(top, r);
    return 2 * pi<double>() * top * 1.5 + 40;
  };

  struct Ranked {
    Candidate cand;
    std::vector<double> fr, gr;
  };
  std::vector<Ranked> ranked;
  int evaluations = 0;
  for (const auto& [fr, gr] : splits) {
    Candidate c = problem.solve(fr, gr);
    ++evaluations;
    if (!c.ok || problem.grid_violation(c, vmax_for(fr, gr)) > 1e-14) continue;
    ranked.push_back({std::move(c), fr, gr});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.cand.bound < b.cand.bound; });

  std::optional<OptimizedAux> best;
  for (const auto& r : ranked) {
    RadialAux aux = to_unit_rmin(n, r.cand.coeffs, rho2);
    EuclidResult check = verify_and_bound(aux);
    if (check.valid) {
      best = OptimizedAux{std::move(aux), std::move(check), d, r.fr, r.gr, false, evaluations};
      break;
    }
  }
  if (!best) {
    throw VerificationError("no forced-root auxiliary function of degree " + std::to_string(d) +
                            " in dimension " + std::to_string(n) + " passed exact verification");
  }

  if (opt.strategy != AuxStrategy::forced_roots && half > 0 && opt.polish_iterations > 0) {
    PolishContext ctx{&problem, best->f_roots.size(), vmax_for(best->f_roots, best->fhat_roots)};
    const std::size_t dim = best->f_roots.size() + best->fhat_roots.size();
    gsl_vector* x = gsl_vector_alloc(dim);
    gsl_vector* step = gsl_vector_alloc(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double r = i < ctx.nf ? best->f_roots[i] : best->fhat_roots[i - ctx.nf];
      gsl_vector_set(x, i, r);
      gsl_vector_set(step, i, 0.02 * r);
    }
    gsl_multimin_function fn{&polish_objective, dim, &ctx};
    gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < opt.polish_iterations; ++it) {
      if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-10) == GSL_SUCCESS) break;
    }
    std::vector<double> fr;
    std::vector<double> gr;
    for (std::size_t i = 0; i < dim; ++i) (i < ctx.nf ? fr : gr).push_back(gsl_vector_get(s->x, i));
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(step);
    gsl_vector_free(x);
    best->evaluations += ctx.evaluations;

    const Candidate c = problem.solve(fr, gr);
    if (c.ok && c.bound < to_double(best->check.density_bound)) {
      RadialAux aux = to_unit_rmin(n, c.coeffs, rho2);
      EuclidResult check = verify_and_bound(aux);
      if (check.valid && check.density_bound < best->check.density_bound) {
        best->aux = std::move(aux);
        best->check = std::move(check);
        best->f_roots = std::move(fr);
        best->fhat_roots = std::move(gr);
        best->polished = true;
      }
    }
  }
  return *best;
}

TaylorProbe taylor_probe(const RadialAux& aux) {
  const int n = aux.dimension;
  // With w = r2 / s^2: f = exp(-pi w) p(2 pi w).
  auto series = [](const Polynomial<HighReal>& p, const HighReal& s2) {
    const HighReal pi_ = pi<HighReal>();
    const HighReal c0 = p[0];
    const HighReal c1 = 2 * pi_ * p[1] - pi_ * p[0];
    const HighReal c2 = 4 * pi_ * pi_ * p[2] - 2 * pi_ * pi_ * p[1] + pi_ * pi_ * p[0] / 2;
    return std::array<HighReal, 3>{c0, c1 / s2, c2 / (s2 * s2)};
  };
  const HighReal s2 = aux.scale * aux.scale;
  const auto f = series(aux.f_polynomial(), s2);
  auto fh = series(aux.transform_polynomial(), 1 / s2);
  const HighReal sn = pow(aux.scale, n);
  for (auto& c : fh) c *= sn;
  if (!(f[0] > 0) || !(fh[0] > 0)) throw DomainError("taylor_probe needs f(0) > 0 and f^(0) > 0");
  const HighReal mu = pow(f[0] / fh[0], HighReal(1) / n);
  const HighReal mu2 = mu * mu;
  TaylorProbe t{};
  t.mu = to_double(mu);
  t.g_quadratic = to_double(f[1] / (f[0] * mu2));
  t.g_quartic = to_double(f[2] / (f[0] * mu2 * mu2));
  t.ghat_quadratic = to_double(fh[1] * mu2 / fh[0]);
  t.ghat_quartic = to_double(fh[2] * mu2 * mu2 / fh[0]);
  return t;
}

}  // namespace optima
