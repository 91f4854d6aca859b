#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "optima/config.hpp"
#include "optima/numeric.hpp"

namespace optima {

/// Header of the torus variant of the points format: "N n L r".
struct TorusHeader {
  double box = 0;
  double radius = 0;
};

/// Raw contents of a points file.
struct PointsData {
  int dimension = 0;
  std::size_t count = 0;
  std::vector<HighReal> coords;  // row-major, count * dimension
  std::optional<TorusHeader> torus;
};

/// Parses the points format: a header line "N n" (or "N n L r"), then N
/// rows of n whitespace-separated decimals. Lines starting with '#' are
/// comments. Throws ParseError on malformed input.
PointsData read_points(std::istream& in);
PointsData read_points_file(const std::filesystem::path& path);

/// Reads a spherical configuration; rows must be unit vectors within 1e-9
/// unless renormalize is set.
Configuration load_configuration(const std::filesystem::path& path, bool renormalize = false);
Configuration load_configuration(std::istream& in, bool renormalize = false);

void write_points(std::ostream& out, const Configuration& c, int digits = 20);
void write_torus_points(std::ostream& out, int dimension, double box, double radius,
                        const std::vector<double>& coords);

}  // namespace optima
