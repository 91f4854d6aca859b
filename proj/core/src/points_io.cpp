#include "optima/points_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "optima/errors.hpp"

namespace optima {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

PointsData read_points(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("points file: missing header");
  const auto header = tokens(line);
  if (header.size() != 2 && header.size() != 4)
    throw ParseError("points file line " + std::to_string(lineno) + ": header must be 'N n' or 'N n L r'");
  PointsData data;
  try {
    const long count = std::stol(header[0]);
    const long dim = std::stol(header[1]);
    if (count < 1 || dim < 1) throw ParseError("points file: N and n must be positive");
    data.count = static_cast<std::size_t>(count);
    data.dimension = static_cast<int>(dim);
    if (header.size() == 4) data.torus = TorusHeader{std::stod(header[2]), std::stod(header[3])};
  } catch (const std::logic_error&) {
    throw ParseError("points file line " + std::to_string(lineno) + ": malformed header");
  }
  data.coords.reserve(data.count * static_cast<std::size_t>(data.dimension));
  for (std::size_t i = 0; i < data.count; ++i) {
    if (!next_content_line(in, line, lineno))
      throw ParseError("points file: expected " + std::to_string(data.count) + " rows, found " + std::to_string(i));
    const auto row = tokens(line);
    if (row.size() != static_cast<std::size_t>(data.dimension))
      throw ParseError("points file line " + std::to_string(lineno) + ": expected " +
                       std::to_string(data.dimension) + " coordinates");
    for (const auto& tok : row) data.coords.push_back(parse_high(tok));
  }
  if (next_content_line(in, line, lineno))
    throw ParseError("points file line " + std::to_string(lineno) + ": trailing data after " +
                     std::to_string(data.count) + " rows");
  return data;
}

PointsData read_points_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open points file " + path.string());
  return read_points(in);
}

Configuration load_configuration(std::istream& in, bool renormalize) {
  PointsData data = read_points(in);
  const std::size_t n = static_cast<std::size_t>(data.dimension);
  for (std::size_t i = 0; i < data.count; ++i) {
    HighReal norm2 = 0;
    for (std::size_t d = 0; d < n; ++d) norm2 += data.coords[i * n + d] * data.coords[i * n + d];
    if (!renormalize && abs(norm2 - 1) > HighReal(1e-9))
      throw ParseError("points file row " + std::to_string(i + 1) + " is not a unit vector (|x|^2 = " +
                       to_string(norm2, 12) + "); pass the renormalize option to rescale");
    if (norm2 == 0) throw ParseError("points file row " + std::to_string(i + 1) + " is the zero vector");
    const HighReal inv = 1 / sqrt(norm2);
    for (std::size_t d = 0; d < n; ++d) data.coords[i * n + d] *= inv;
  }
  return Configuration(data.dimension, std::move(data.coords));
}

Configuration load_configuration(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open points file " + path.string());
  return load_configuration(in, renormalize);
}

void write_points(std::ostream& out, const Configuration& c, int digits) {
  if (!c.name().empty()) out << "# " << c.name() << "\n";
  out << c.size() << " " << c.dimension() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto p = c.point(i);
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? " " : "") << to_string(p[d], digits);
    out << "\n";
  }
}

void write_torus_points(std::ostream& out, int dimension, double box, double radius,
                        const std::vector<double>& coords) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  out << coords.size() / n << " " << dimension << " " << std::setprecision(17) << box << " " << radius << "\n";
  for (std::size_t i = 0; i < coords.size() / n; ++i) {
    for (std::size_t d = 0; d < n; ++d) out << (d ? " " : "") << coords[i * n + d];
    out << "\n";
  }
}

}  // namespace optima
