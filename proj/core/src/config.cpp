#include "optima/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <random>

#include <Eigen/QR>

#include "optima/errors.hpp"
#include "optima/specfun.hpp"

namespace optima {

Configuration::Configuration(int dimension, std::vector<HighReal> coords, std::string name)
    : dimension_(dimension), coords_(std::move(coords)), name_(std::move(name)) {
  if (dimension_ < 1) throw DomainError("configuration dimension must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dimension_) != 0)
    throw DomainError("coordinate count is not a positive multiple of the dimension");
  size_ = coords_.size() / static_cast<std::size_t>(dimension_);
  gram_.resize(size_ * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i; j < size_; ++j) {
      HighReal s = 0;
      const auto x = point(i);
      const auto y = point(j);
      for (int d = 0; d < dimension_; ++d) s += x[static_cast<std::size_t>(d)] * y[static_cast<std::size_t>(d)];
      gram_[i * size_ + j] = s;
      gram_[j * size_ + i] = s;
    }
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (abs(gram_[i * size_ + i] - 1) > HighReal(1e-12))
      throw DomainError("point " + std::to_string(i) + " is not a unit vector");
    for (std::size_t j = i + 1; j < size_; ++j)
      if (gram_[i * size_ + j] > HighReal(1) - HighReal(1e-12))
        throw DomainError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  }
}

Configuration Configuration::from_doubles(int dimension, std::span<const double> coords, std::string name,
                                          bool renormalize, double norm_tol) {
  if (dimension < 1 || coords.empty() || coords.size() % static_cast<std::size_t>(dimension) != 0)
    throw DomainError("coordinate count is not a positive multiple of the dimension");
  const std::size_t n = static_cast<std::size_t>(dimension);
  std::vector<HighReal> hc(coords.begin(), coords.end());
  for (std::size_t i = 0; i < coords.size() / n; ++i) {
    HighReal norm2 = 0;
    for (std::size_t d = 0; d < n; ++d) norm2 += hc[i * n + d] * hc[i * n + d];
    if (!renormalize) {
      if (abs(norm2 - 1) > HighReal(norm_tol))
        throw DomainError("point " + std::to_string(i) + " is not a unit vector (|x|^2 = " +
                          to_string(norm2, 17) + ")");
    }
    if (norm2 == 0) throw DomainError("point " + std::to_string(i) + " is the zero vector");
    const HighReal inv = 1 / sqrt(norm2);
    for (std::size_t d = 0; d < n; ++d) hc[i * n + d] *= inv;
  }
  return Configuration(dimension, std::move(hc), std::move(name));
}

std::vector<double> Configuration::coords_double() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) out.push_back(to_double(x));
  return out;
}

Configuration Configuration::transformed(const Eigen::MatrixXd& q) const {
  if (q.rows() != dimension_ || q.cols() != dimension_) throw DomainError("transform has wrong shape");
  const std::size_t n = static_cast<std::size_t>(dimension_);
  std::vector<HighReal> out(coords_.size());
  for (std::size_t i = 0; i < size_; ++i) {
    HighReal norm2 = 0;
    for (std::size_t r = 0; r < n; ++r) {
      HighReal s = 0;
      for (std::size_t c = 0; c < n; ++c) s += HighReal(q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) * coords_[i * n + c];
      out[i * n + r] = s;
      norm2 += s * s;
    }
    const HighReal inv = 1 / sqrt(norm2);
    for (std::size_t r = 0; r < n; ++r) out[i * n + r] *= inv;
  }
  return Configuration(dimension_, std::move(out), name_);
}

std::uint64_t DistanceDistribution::total() const {
  std::uint64_t s = 0;
  for (const auto& e : entries) s += e.second;
  return s;
}

std::uint64_t DistanceDistribution::at(double t, double tol) const {
  for (const auto& [value, count] : entries)
    if (std::abs(to_double(value) - t) <= tol) return count;
  return 0;
}

Configuration ngon(int count) {
  if (count < 2) throw DomainError("ngon needs N >= 2");
  std::vector<HighReal> c;
  const HighReal two_pi = 2 * pi<HighReal>();
  for (int k = 0; k < count; ++k) {
    const HighReal theta = two_pi * k / count;
    c.push_back(cos(theta));
    c.push_back(sin(theta));
  }
  return Configuration(2, std::move(c), "ngon:" + std::to_string(count));
}

Configuration simplex(int dimension) {
  if (dimension < 1) throw DomainError("simplex needs n >= 1");
  const int n = dimension;
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  // Scaled centered basis vectors of R^{n+1}, then a Householder reflection
  // sending the all-ones direction to e_{n+1} drops them into R^n.
  const HighReal scale = sqrt(HighReal(n + 1) / n);
  const HighReal a = 1 / sqrt(HighReal(n + 1));
  std::vector<HighReal> u(m, a);
  u[m - 1] -= 1;
  HighReal uu = 0;
  for (const auto& x : u) uu += x * x;
  std::vector<HighReal> c;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<HighReal> v(m, -scale / (n + 1));
    v[i] += scale;
    HighReal uv = 0;
    for (std::size_t d = 0; d < m; ++d) uv += u[d] * v[d];
    for (std::size_t d = 0; d < m; ++d) v[d] -= 2 * uv / uu * u[d];
    for (std::size_t d = 0; d + 1 < m; ++d) c.push_back(v[d]);
  }
  return Configuration(n, std::move(c), "simplex:" + std::to_string(n));
}

Configuration cross_polytope(int dimension) {
  if (dimension < 1) throw DomainError("cross polytope needs n >= 1");
  const std::size_t n = static_cast<std::size_t>(dimension);
  std::vector<HighReal> c(2 * n * n, HighReal(0));
  for (std::size_t i = 0; i < n; ++i) {
    c[(2 * i) * n + i] = 1;
    c[(2 * i + 1) * n + i] = -1;
  }
  return Configuration(dimension, std::move(c), "cross-polytope:" + std::to_string(dimension));
}

Configuration icosahedron() {
  const HighReal phi = (1 + sqrt(HighReal(5))) / 2;
  const HighReal norm = sqrt(1 + phi * phi);
  std::vector<HighReal> c;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const HighReal base[3] = {HighReal(0), HighReal(s1) / norm, s2 * phi / norm};
      for (int shift = 0; shift < 3; ++shift)
        for (int d = 0; d < 3; ++d) c.push_back(base[(d + shift) % 3]);
    }
  }
  return Configuration(3, std::move(c), "icosahedron");
}

Configuration e8_roots() {
  std::vector<HighReal> c;
  const HighReal inv_sqrt2 = 1 / sqrt(HighReal(2));
  // Permutations of (+-1, +-1, 0, ..., 0).
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<HighReal> v(8, HighReal(0));
          v[static_cast<std::size_t>(i)] = si * inv_sqrt2;
          v[static_cast<std::size_t>(j)] = sj * inv_sqrt2;
          c.insert(c.end(), v.begin(), v.end());
        }
  // (+-1/2, ..., +-1/2) with an even number of minus signs.
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    for (int d = 0; d < 8; ++d) c.push_back(((mask >> d) & 1 ? -1 : 1) * inv_sqrt2 / 2);
  }
  return Configuration(8, std::move(c), "e8-roots");
}

namespace {

int parse_param(std::string_view name, std::string_view param) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), v);
  if (ec != std::errc() || ptr != param.data() + param.size())
    throw ParseError("bad parameter '" + std::string(param) + "' for " + std::string(name));
  return v;
}

}  // namespace

Configuration catalog(std::string_view spec) {
  std::string s(spec);
  std::replace(s.begin(), s.end(), '_', '-');
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  std::string name = s;
  std::string param;
  if (auto colon = s.find(':'); colon != std::string::npos) {
    name = s.substr(0, colon);
    param = s.substr(colon + 1);
  } else if (auto open = s.find('('); open != std::string::npos && s.back() == ')') {
    name = s.substr(0, open);
    param = s.substr(open + 1, s.size() - open - 2);
  }
  auto need_param = [&]() {
    if (param.empty()) throw ParseError("catalog entry '" + name + "' needs a parameter");
    return parse_param(name, param);
  };
  if (name == "ngon") return ngon(need_param());
  if (name == "simplex") return simplex(need_param());
  if (name == "cross-polytope") return cross_polytope(need_param());
  if (name == "icosahedron") return icosahedron();
  if (name == "e8-roots" || name == "e8") return e8_roots();
  throw ParseError("unknown catalog configuration '" + std::string(spec) + "'");
}

DistanceDistribution distance_distribution(const Configuration& c, double merge_tol) {
  if (merge_tol < 0) throw DomainError("merge tolerance must be nonnegative");
  const std::size_t n = c.size();
  std::vector<HighReal> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values.push_back(c.inner_product(i, j));
  std::sort(values.begin(), values.end());

  DistanceDistribution dist{c.dimension(), n, {}};
  const HighReal tol(merge_tol);
  std::size_t start = 0;
  HighReal prev_hi;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= tol) continue;
    // Cluster values[start, i).
    HighReal sum = 0;
    for (std::size_t k = start; k < i; ++k) sum += values[k];
    if (!dist.entries.empty() && values[start] - prev_hi <= 10 * tol)
      throw ClusterAmbiguityError("inner-product clusters near " + to_string(values[start], 12) +
                                  " are not resolvable at merge tolerance " + std::to_string(merge_tol));
    dist.entries.emplace_back(sum / (i - start), static_cast<std::uint64_t>(i - start));
    prev_hi = values[i - 1];
    start = i;
  }
  // Points are unit vectors and distinct, so the top cluster is t = 1 with A_1 = N.
  if (dist.entries.back().second != n)
    throw ClusterAmbiguityError("inner products within merge tolerance of 1 between distinct points");
  return dist;
}

InnerProductSpectrum inner_product_spectrum(const Configuration& c, double merge_tol) {
  const auto dist = distance_distribution(c, merge_tol);
  InnerProductSpectrum spec;
  for (std::size_t i = 0; i + 1 < dist.entries.size(); ++i) spec.values.push_back(dist.entries[i].first);
  spec.m = static_cast<int>(spec.values.size());
  return spec;
}

double kernel_sum(int dimension, std::span<const double> coords, int k) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  const std::size_t count = coords.size() / n;
  double total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      double t = 0;
      for (std::size_t d = 0; d < n; ++d) t += coords[i * n + d] * coords[j * n + d];
      total += gegenbauer_value<double>(dimension, k, t);
    }
  }
  return total;
}

double kernel_sum(const Configuration& c, int k) {
  double total = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      total += gegenbauer_value<double>(c.dimension(), k, to_double(c.inner_product(i, j)));
  return total;
}

int design_strength(const Configuration& c, int k_max, double eps) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  const int n = c.dimension();
  if (n < 2) {
    // On S^0 the only balanced sets are {+1, -1}; treat via degree-1 sums.
    throw DomainError("design strength needs dimension >= 2");
  }
  const std::size_t count = c.size();
  std::vector<double> sums(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const auto v = gegenbauer_values<double>(n, k_max, to_double(c.inner_product(i, j)));
      for (std::size_t k = 0; k < v.size(); ++k) sums[k] += v[k];
    }
  }
  const double threshold = eps * static_cast<double>(count * count);
  int strength = 0;
  for (int k = 1; k <= k_max; ++k) {
    if (std::abs(sums[static_cast<std::size_t>(k)]) > threshold) break;
    strength = k;
  }
  return strength;
}

Eigen::MatrixXd kernel_matrix(int dimension, std::span<const double> coords, int k) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  const Eigen::Index count = static_cast<Eigen::Index>(coords.size() / n);
  Eigen::MatrixXd m(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i; j < count; ++j) {
      double t = 0;
      for (std::size_t d = 0; d < n; ++d) t += coords[static_cast<std::size_t>(i) * n + d] * coords[static_cast<std::size_t>(j) * n + d];
      m(i, j) = m(j, i) = gegenbauer_value<double>(dimension, k, t);
    }
  }
  return m;
}

Eigen::MatrixXd random_orthogonal(int dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd a(dimension, dimension);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  // Sign fix on R's diagonal makes the distribution Haar.
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

std::vector<double> random_sphere_points(int dimension, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const std::size_t n = static_cast<std::size_t>(dimension);
  std::vector<double> out(count * n);
  for (std::size_t i = 0; i < count; ++i) {
    double norm2 = 0;
    do {
      norm2 = 0;
      for (std::size_t d = 0; d < n; ++d) {
        out[i * n + d] = gauss(rng);
        norm2 += out[i * n + d] * out[i * n + d];
      }
    } while (norm2 < 1e-300);
    const double inv = 1 / std::sqrt(norm2);
    for (std::size_t d = 0; d < n; ++d) out[i * n + d] *= inv;
  }
  return out;
}

}  // namespace optima
