#include "optima/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "optima/errors.hpp"
#include "optima/lattice.hpp"

namespace optima {

double torus_distance2(int n, double box, const double* a, const double* b) {
  double s = 0;
  for (int d = 0; d < n; ++d) {
    double diff = std::abs(a[d] - b[d]);
    diff = std::min(diff, box - diff);
    s += diff * diff;
  }
  return s;
}

namespace {

// Uniform cell list on the torus; cells are at least 2r wide, so a ball
// can only conflict with centers in the 3^n neighbouring cells.
class CellGrid {
 public:
  CellGrid(int n, double box, double radius) : n_(n), box_(box) {
    per_dim_ = std::max(3, static_cast<int>(std::floor(box / (2 * radius))));
    width_ = box / per_dim_;
    std::size_t total = 1;
    for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(per_dim_);
    cells_.resize(total);
  }

  void insert(std::size_t index, const double* p) { cells_[cell_of(p)].push_back(index); }

  double nearest2(const std::vector<double>& centers, const double* p) const {
    int base[3] = {0, 0, 0};
    for (int d = 0; d < n_; ++d) base[d] = coord(p[d]);
    double best = std::numeric_limits<double>::infinity();
    int offs[3] = {-1, -1, -1};
    for (;;) {
      std::size_t cell = 0;
      for (int d = n_ - 1; d >= 0; --d) {
        const int c = ((base[d] + offs[d]) % per_dim_ + per_dim_) % per_dim_;
        cell = cell * static_cast<std::size_t>(per_dim_) + static_cast<std::size_t>(c);
      }
      for (std::size_t idx : cells_[cell])
        best = std::min(best, torus_distance2(n_, box_, p, &centers[idx * static_cast<std::size_t>(n_)]));
      int d = 0;
      while (d < n_ && ++offs[d] > 1) offs[d++] = -1;
      if (d == n_) break;
    }
    return best;
  }

 private:
  int coord(double x) const { return std::min(per_dim_ - 1, static_cast<int>(x / width_)); }
  std::size_t cell_of(const double* p) const {
    std::size_t cell = 0;
    for (int d = n_ - 1; d >= 0; --d) cell = cell * static_cast<std::size_t>(per_dim_) + static_cast<std::size_t>(coord(p[d]));
    return cell;
  }

  int n_;
  double box_;
  int per_dim_;
  double width_;
  std::vector<std::vector<std::size_t>> cells_;
};

std::uint64_t grid_size(int n, std::uint64_t per_dim) {
  std::uint64_t total = 1;
  for (int d = 0; d < n; ++d) total *= per_dim;
  return total;
}

double wrap(double x, double box) {
  x = std::fmod(x, box);
  return x < 0 ? x + box : x;
}

void grid_point(int n, std::uint64_t index, std::uint64_t per_dim, double h, double* out) {
  for (int d = 0; d < n; ++d) {
    out[d] = static_cast<double>(index % per_dim) * h;
    index /= per_dim;
  }
}

}  // namespace

double slack_adjusted_bound(int n, double radius, double probe_resolution) {
  return std::pow(2.0, -n) * std::pow(2 * radius / (2 * radius + std::sqrt(static_cast<double>(n)) * probe_resolution), n);
}

TorusPacking saturate(const SaturationOptions& opt) {
  const int n = opt.dimension;
  if (n < 1 || n > 3) throw PreconditionError("saturation supports dimensions 1, 2, 3");
  if (!(opt.radius > 0)) throw PreconditionError("radius must be positive");
  if (opt.box < 8 * opt.radius) throw PreconditionError("box edge must be at least 8r");
  if (!(opt.probe_resolution > 0) || opt.probe_resolution > opt.radius / 4)
    throw PreconditionError("probe resolution must lie in (0, r/4]");
  const auto per_dim = static_cast<std::uint64_t>(std::ceil(opt.box / opt.probe_resolution));
  const double h = opt.box / static_cast<double>(per_dim);
  const std::uint64_t points = grid_size(n, per_dim);
  if (points > opt.max_grid_points)
    throw BudgetError("probe grid has " + std::to_string(points) + " points, above the budget " +
                      std::to_string(opt.max_grid_points));

  const double min2 = 4 * opt.radius * opt.radius;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> uni(0.0, opt.box);
  CellGrid cells(n, opt.box, opt.radius);
  TorusPacking out{n, opt.box, opt.radius, opt.seed, {}, false, 0, h, points, 0, 0};
  std::vector<double>& centers = out.centers;
  auto try_insert = [&](const double* p) {
    if (cells.nearest2(centers, p) < min2) return false;
    const std::size_t index = centers.size() / static_cast<std::size_t>(n);
    centers.insert(centers.end(), p, p + n);
    cells.insert(index, p);
    return true;
  };

  std::uint64_t attempts = opt.random_attempts;
  if (attempts == 0) {
    const double capacity = std::pow(opt.box, n) / ball_volume(n, opt.radius);
    attempts = static_cast<std::uint64_t>(2000 * capacity);
  }
  double p[3];
  for (std::uint64_t a = 0; a < attempts; ++a) {
    for (int d = 0; d < n; ++d) p[d] = uni(rng);
    if (try_insert(p)) ++out.random_inserted;
  }

  // Fill the remaining free region: draw a random admissible grid point and
  // try a few uniform points in its cell before taking the grid point
  // itself. Close to uniform sampling of the available area, and each
  // step either inserts a center or retires a grid point.
  std::vector<std::uint64_t> open;
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    grid_point(n, idx, per_dim, h, p);
    if (cells.nearest2(centers, p) >= min2) open.push_back(idx);
  }
  std::uniform_real_distribution<double> jitter(-h / 2, h / 2);
  double q[3];
  while (!open.empty()) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
    grid_point(n, open[pick], per_dim, h, p);
    if (cells.nearest2(centers, p) < min2) {
      open[pick] = open.back();
      open.pop_back();
      continue;
    }
    bool placed = false;
    for (int t = 0; t < 4 && !placed; ++t) {
      for (int d = 0; d < n; ++d) q[d] = wrap(p[d] + jitter(rng), opt.box);
      placed = try_insert(q);
    }
    if (!placed) try_insert(p);
    ++out.sweep_inserted;
  }
  bool saturated = true;
  for (std::uint64_t idx = 0; idx < points && saturated; ++idx) {
    grid_point(n, idx, per_dim, h, p);
    saturated = cells.nearest2(centers, p) < min2;
  }
  out.saturated = saturated;
  out.density = static_cast<double>(out.count()) * ball_volume(n, opt.radius) / std::pow(opt.box, n);
  return out;
}

double min_pair_distance(const TorusPacking& p) {
  const std::size_t count = p.count();
  const auto n = static_cast<std::size_t>(p.dimension);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      best = std::min(best, torus_distance2(p.dimension, p.box, &p.centers[i * n], &p.centers[j * n]));
  return std::sqrt(best);
}

double max_grid_gap(const TorusPacking& p) {
  const int n = p.dimension;
  CellGrid cells(n, p.box, p.radius);
  for (std::size_t i = 0; i < p.count(); ++i) cells.insert(i, &p.centers[i * static_cast<std::size_t>(n)]);
  const auto per_dim = static_cast<std::uint64_t>(std::llround(p.box / p.grid_spacing));
  double worst = 0;
  double q[3];
  for (std::uint64_t idx = 0; idx < p.grid_points; ++idx) {
    grid_point(n, idx, per_dim, p.grid_spacing, q);
    double d2 = cells.nearest2(p.centers, q);
    if (!std::isfinite(d2)) {
      // Nothing within the neighbouring cells: fall back to all centers.
      for (std::size_t i = 0; i < p.count(); ++i)
        d2 = std::min(d2, torus_distance2(n, p.box, q, &p.centers[i * static_cast<std::size_t>(n)]));
    }
    worst = std::max(worst, d2);
  }
  return std::sqrt(worst);
}

}  // namespace optima
