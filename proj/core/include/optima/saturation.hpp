#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace optima {

struct SaturationOptions {
  int dimension = 2;
  double box = 50;
  double radius = 1;
  std::uint64_t seed = 0;
  /// Grid spacing of the saturation sweep; at most radius / 4.
  double probe_resolution = 0.25;
  /// Uniform random insertion attempts before the sweep. 0 picks 2000 per
  /// ball that fits by volume, enough for the random phase to approach the
  /// jamming density; the sweep then only fills what the grid can still see.
  std::uint64_t random_attempts = 0;
  /// Largest probe grid the sweep may visit.
  std::uint64_t max_grid_points = 50'000'000;
};

/// Hard spheres of radius r with centers in the flat torus [0, L)^n.
struct TorusPacking {
  int dimension;
  double box;
  double radius;
  std::uint64_t seed;
  std::vector<double> centers;  // row-major
  bool saturated;
  double density;
  /// Grid spacing actually used (<= probe_resolution).
  double grid_spacing;
  std::uint64_t grid_points;
  std::uint64_t random_inserted;
  std::uint64_t sweep_inserted;

  std::size_t count() const { return centers.size() / static_cast<std::size_t>(dimension); }
};

/// Random sequential insertion followed by a sweep of the probe grid in a
/// seeded random order; a final pass confirms that no grid point admits
/// another ball. Throws PreconditionError unless L >= 8r and
/// probe_resolution <= r/4, BudgetError when the grid is too large.
TorusPacking saturate(const SaturationOptions& opt);

/// Squared distance on the torus [0, L)^n.
double torus_distance2(int n, double box, const double* a, const double* b);

/// Smallest pairwise torus distance (infinity for fewer than two centers).
double min_pair_distance(const TorusPacking& p);

/// Largest distance from a probe grid point to its nearest center.
double max_grid_gap(const TorusPacking& p);

/// 2^{-n} (2r / (2r + sqrt(n) h))^n for probe resolution h.
double slack_adjusted_bound(int n, double radius, double probe_resolution);

}  // namespace optima
