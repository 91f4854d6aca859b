#pragma once

#include <string>
#include <vector>

namespace optima {

struct ReferenceConstant {
  std::string key;
  std::string exact;
  double value;
  std::string provenance;
};

/// Known values the library's computations are compared against.
const std::vector<ReferenceConstant>& reference_constants();

/// Looks up a constant by key; throws DomainError when absent.
const ReferenceConstant& reference_constant(const std::string& key);

/// Best known packing density used as the ratio reference for the density
/// bound in dimension n: 1, pi/sqrt(12) and pi^4/384 for n = 1, 2, 8, and
/// the D_n lattice density otherwise.
double reference_density(int n);

}  // namespace optima
