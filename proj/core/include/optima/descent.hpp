#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optima/config.hpp"
#include "optima/potential.hpp"

namespace optima {

struct DescentOptions {
  int dimension = 3;
  std::size_t count = 2;
  int restarts = 10;
  std::uint64_t seed = 0;
  int max_iters = 20000;
  /// Stop when the Riemannian gradient norm drops to this value.
  double grad_tol = 1e-10;
  /// Keep the accepted-step energy sequence of every restart.
  bool record_trace = false;
};

struct RestartRecord {
  int index = 0;
  double energy = 0;
  int iterations = 0;
  double grad_norm = 0;
  bool converged = false;
  /// Number of times the random start was redrawn after a collapse.
  int reseeds = 0;
  std::vector<double> trace;
};

struct DescentResult {
  Configuration best;
  /// energy(best, f) at high precision, rounded to double.
  double energy;
  int best_index;
  int restarts;
  std::uint64_t seed;
  std::vector<RestartRecord> runs;
};

/// Projected-gradient energy minimization on (S^{n-1})^N with Armijo
/// backtracking (constant 1e-4, shrink 1/2) and Barzilai-Borwein trial steps,
/// from `restarts` uniform random starts. Deterministic in the seed.
DescentResult minimize_energy(const DescentOptions& options, const Potential& f);

enum class FivePointShape { triangular_bipyramid, square_pyramid, other };

std::string to_string(FivePointShape shape);

/// Matches the inner-product multiset of a 5-point configuration in S^2
/// against the triangular bipyramid and the one-parameter square pyramids.
FivePointShape classify_five_points(const Configuration& c, double tol = 1e-6);
inline FivePointShape classify_five_points(const DescentResult& r, double tol = 1e-6) {
  return classify_five_points(r.best, tol);
}

}  // namespace optima
