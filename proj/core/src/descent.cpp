#include "optima/descent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "optima/errors.hpp"

namespace optima {

namespace {

struct Evaluation {
  double energy;
  std::vector<double> grad;  // Riemannian gradient
  double grad_norm2;
};

Evaluation evaluate(int dimension, const std::vector<double>& x, const Potential& f) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  const std::size_t count = x.size() / n;
  Evaluation e{0.0, std::vector<double>(x.size(), 0.0), 0.0};
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      double r2 = 0;
      for (std::size_t d = 0; d < n; ++d) {
        const double diff = x[i * n + d] - x[j * n + d];
        r2 += diff * diff;
      }
      if (!(r2 > 0)) {
        e.energy = std::numeric_limits<double>::infinity();
        return e;
      }
      e.energy += f.value(r2);
      const double dfdr = f.derivative(r2, 1);
      for (std::size_t d = 0; d < n; ++d) {
        const double g = 2 * dfdr * (x[i * n + d] - x[j * n + d]);
        e.grad[i * n + d] += g;
        e.grad[j * n + d] -= g;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    double radial = 0;
    for (std::size_t d = 0; d < n; ++d) radial += e.grad[i * n + d] * x[i * n + d];
    for (std::size_t d = 0; d < n; ++d) {
      e.grad[i * n + d] -= radial * x[i * n + d];
      e.grad_norm2 += e.grad[i * n + d] * e.grad[i * n + d];
    }
  }
  return e;
}

void retract(int dimension, std::vector<double>& x) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  for (std::size_t i = 0; i < x.size() / n; ++i) {
    double norm2 = 0;
    for (std::size_t d = 0; d < n; ++d) norm2 += x[i * n + d] * x[i * n + d];
    const double inv = 1 / std::sqrt(norm2);
    for (std::size_t d = 0; d < n; ++d) x[i * n + d] *= inv;
  }
}

struct RestartOutcome {
  RestartRecord record;
  std::vector<double> points;
};

RestartOutcome run_restart(const DescentOptions& opt, const Potential& f, int index) {
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxReseeds = 16;
  RestartOutcome out;
  out.record.index = index;
  for (int reseed = 0; reseed <= kMaxReseeds; ++reseed) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(reseed)};
    std::mt19937_64 rng(seq);
    std::vector<double> x =
        random_sphere_points(opt.dimension, opt.count, rng());
    Evaluation cur = evaluate(opt.dimension, x, f);
    if (!std::isfinite(cur.energy)) continue;

    out.record.reseeds = reseed;
    out.record.trace.clear();
    if (opt.record_trace) out.record.trace.push_back(cur.energy);
    double step = 0.1 / std::max(std::sqrt(cur.grad_norm2), 1e-12);
    std::vector<double> prev_x;
    std::vector<double> prev_g;
    bool collapsed = false;
    int it = 0;
    for (; it < opt.max_iters; ++it) {
      if (std::sqrt(cur.grad_norm2) <= opt.grad_tol) {
        out.record.converged = true;
        break;
      }
      if (!prev_x.empty()) {
        // Barzilai-Borwein trial step from the last accepted move.
        double ss = 0;
        double sy = 0;
        for (std::size_t k = 0; k < x.size(); ++k) {
          const double s = x[k] - prev_x[k];
          const double y = cur.grad[k] - prev_g[k];
          ss += s * s;
          sy += s * y;
        }
        if (sy > 0 && ss > 0) step = ss / sy;
        else step *= 2;
      }
      bool accepted = false;
      std::vector<double> trial(x.size());
      Evaluation next;
      for (int shrink = 0; shrink < 80; ++shrink) {
        for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - step * cur.grad[k];
        retract(opt.dimension, trial);
        next = evaluate(opt.dimension, trial, f);
        if (std::isfinite(next.energy) && next.energy <= cur.energy - kArmijo * step * cur.grad_norm2) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;  // stalled at working precision
      prev_x = std::move(x);
      prev_g = std::move(cur.grad);
      x = std::move(trial);
      cur = std::move(next);
      if (opt.record_trace) out.record.trace.push_back(cur.energy);
    }
    if (!std::isfinite(cur.energy)) collapsed = true;
    if (collapsed) continue;
    out.record.iterations = it;
    out.record.energy = cur.energy;
    out.record.grad_norm = std::sqrt(cur.grad_norm2);
    if (!out.record.converged && std::sqrt(cur.grad_norm2) <= opt.grad_tol) out.record.converged = true;
    out.points = std::move(x);
    return out;
  }
  throw Error("energy descent: every random start collapsed");
}

}  // namespace

DescentResult minimize_energy(const DescentOptions& opt, const Potential& f) {
  if (opt.count < 2) throw DomainError("minimize_energy needs N >= 2");
  if (opt.dimension < 2) throw DomainError("minimize_energy needs n >= 2");
  if (opt.restarts < 1) throw DomainError("minimize_energy needs at least one restart");

  std::vector<RestartRecord> runs;
  std::vector<double> best_points;
  int best_index = -1;
  double best_energy = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opt.restarts; ++r) {
    RestartOutcome o = run_restart(opt, f, r);
    // Ties go to the lowest restart index.
    if (o.record.energy < best_energy) {
      best_energy = o.record.energy;
      best_index = r;
      best_points = std::move(o.points);
    }
    runs.push_back(std::move(o.record));
  }
  Configuration best = Configuration::from_doubles(opt.dimension, best_points,
                                                   "minimize:" + std::to_string(opt.count), true);
  const double e = to_double(energy(best, f));
  return DescentResult{std::move(best), e, best_index, opt.restarts, opt.seed, std::move(runs)};
}

std::string to_string(FivePointShape shape) {
  switch (shape) {
    case FivePointShape::triangular_bipyramid:
      return "triangular_bipyramid";
    case FivePointShape::square_pyramid:
      return "square_pyramid";
    case FivePointShape::other:
      return "other";
  }
  return "other";
}

FivePointShape classify_five_points(const Configuration& c, double tol) {
  if (c.size() != 5 || c.dimension() != 3) return FivePointShape::other;
  std::vector<double> ips;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) ips.push_back(to_double(c.inner_product(i, j)));
  std::vector<double> sorted = ips;
  std::sort(sorted.begin(), sorted.end());

  auto matches = [&](std::vector<double> expected) {
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (std::abs(expected[k] - sorted[k]) > tol) return false;
    return true;
  };

  // Poles (t = -1), pole-equator pairs (t = 0), equatorial triangle (t = -1/2).
  if (matches({-1, -0.5, -0.5, -0.5, 0, 0, 0, 0, 0, 0})) return FivePointShape::triangular_bipyramid;

  // Square pyramid, apex at the pole and base at height -h: apex-base
  // products -h, base edges h^2, base diagonals 2h^2 - 1.
  for (std::size_t apex = 0; apex < 5; ++apex) {
    double h = 0;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != apex) h -= to_double(c.inner_product(apex, j));
    h /= 4;
    if (matches({-h, -h, -h, -h, h * h, h * h, h * h, h * h, 2 * h * h - 1, 2 * h * h - 1}))
      return FivePointShape::square_pyramid;
  }
  return FivePointShape::other;
}

}  // namespace optima
