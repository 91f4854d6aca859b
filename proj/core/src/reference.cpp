#include "optima/reference.hpp"

#include <cmath>

#include "optima/errors.hpp"
#include "optima/lattice.hpp"
#include "optima/numeric.hpp"

namespace optima {

const std::vector<ReferenceConstant>& reference_constants() {
  static const std::vector<ReferenceConstant> table = [] {
    const double p = pi<double>();
    return std::vector<ReferenceConstant>{
        {"density.z1", "1", 1.0, "intervals tile the line"},
        {"density.hexagonal", "pi/sqrt(12)", p / std::sqrt(12.0), "hexagonal packing, optimal in the plane"},
        {"density.e8", "pi^4/384", std::pow(p, 4) / 384, "E8 root lattice, optimal in dimension 8"},
        {"density.leech", "pi^12/479001600", std::pow(p, 12) / 479001600.0,
         "Leech lattice, optimal in dimension 24 (display only)"},
        {"kissing.e8", "240", 240, "minimal vectors of E8"},
        {"kissing.leech", "196560", 196560, "minimal vectors of the Leech lattice (display only)"},
        {"taylor.n8.g.quadratic", "-27/10", -2.7, "quadratic Taylor coefficient of the rescaled optimal function, n = 8"},
        {"taylor.n8.ghat.quadratic", "-3/2", -1.5, "quadratic Taylor coefficient of its Fourier transform, n = 8"},
        {"taylor.n24.g.quadratic", "14347/5460", 14347.0 / 5460, "quadratic Taylor coefficient, n = 24 (display only)"},
        {"taylor.n24.ghat.quadratic", "205/156", 205.0 / 156, "quadratic Taylor coefficient of the transform, n = 24 (display only)"},
        {"taylor.n8.g.quartic", "4.2167501240968298210999141", 4.2167501240968298210999141,
         "numerical quartic coefficient, n = 8; rationality unknown"},
        {"taylor.n8.ghat.quartic", "-1.2397969070295980026220772", -1.2397969070295980026220772,
         "numerical quartic coefficient of the transform, n = 8; rationality unknown"},
    };
  }();
  return table;
}

const ReferenceConstant& reference_constant(const std::string& key) {
  for (const auto& c : reference_constants())
    if (c.key == key) return c;
  throw DomainError("unknown reference constant '" + key + "'");
}

double reference_density(int n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (n == 1) return reference_constant("density.z1").value;
  if (n == 2) return reference_constant("density.hexagonal").value;
  if (n == 8) return reference_constant("density.e8").value;
  return packing_density(dn(n));
}

}  // namespace optima
