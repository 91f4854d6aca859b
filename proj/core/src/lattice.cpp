#include "optima/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "optima/errors.hpp"

namespace optima {

namespace {

using RationalMatrix = std::vector<Rational>;  // row-major n x n

Eigen::MatrixXd to_double_matrix(int n, const RationalMatrix& m) {
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = to_double(m[static_cast<std::size_t>(i * n + j)]);
  return out;
}

// Gauss-Jordan over Q. Throws DomainError on a singular matrix.
RationalMatrix rational_inverse(int n, RationalMatrix a, Rational* det = nullptr) {
  const auto N = static_cast<std::size_t>(n);
  RationalMatrix inv(N * N, Rational(0));
  for (std::size_t i = 0; i < N; ++i) inv[i * N + i] = 1;
  Rational d = 1;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && a[piv * N + col] == 0) ++piv;
    if (piv == N) throw DomainError("lattice basis is singular");
    if (piv != col) {
      for (std::size_t k = 0; k < N; ++k) {
        std::swap(a[piv * N + k], a[col * N + k]);
        std::swap(inv[piv * N + k], inv[col * N + k]);
      }
      d = -d;
    }
    const Rational p = a[col * N + col];
    d *= p;
    for (std::size_t k = 0; k < N; ++k) {
      a[col * N + k] /= p;
      inv[col * N + k] /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r * N + col] == 0) continue;
      const Rational f = a[r * N + col];
      for (std::size_t k = 0; k < N; ++k) {
        a[r * N + k] -= f * a[col * N + k];
        inv[r * N + k] -= f * inv[col * N + k];
      }
    }
  }
  if (det) *det = d;
  return inv;
}

RationalMatrix rational_product(int n, const RationalMatrix& a, const RationalMatrix& b) {
  const auto N = static_cast<std::size_t>(n);
  RationalMatrix out(N * N, Rational(0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i * N + k] == 0) continue;
      for (std::size_t j = 0; j < N; ++j) out[i * N + j] += a[i * N + k] * b[k * N + j];
    }
  return out;
}

RationalMatrix transpose(int n, const RationalMatrix& a) {
  const auto N = static_cast<std::size_t>(n);
  RationalMatrix out(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[j * N + i] = a[i * N + j];
  return out;
}

// Neumaier compensated summation.
struct CompensatedSum {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

Lattice::Lattice(Eigen::MatrixXd basis, std::string name) : basis_(std::move(basis)), name_(std::move(name)) {
  if (basis_.rows() < 1 || basis_.rows() != basis_.cols()) throw DomainError("lattice basis must be square");
  gram_ = basis_ * basis_.transpose();
  covolume_ = std::abs(basis_.determinant());
  if (!(covolume_ > 0) || !std::isfinite(covolume_)) throw DomainError("lattice basis is singular");
  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  if (llt.info() != Eigen::Success) throw DomainError("lattice Gram matrix is not positive definite");
}

Lattice::Lattice(int dimension, std::vector<Rational> exact_basis, std::string name)
    : Lattice(to_double_matrix(dimension, exact_basis), std::move(name)) {
  if (exact_basis.size() != static_cast<std::size_t>(dimension * dimension))
    throw DomainError("exact basis has wrong size");
  Rational det;
  rational_inverse(dimension, exact_basis, &det);
  covolume_ = std::abs(to_double(det));
  exact_ = std::move(exact_basis);
}

Lattice Lattice::with_basis_change(const Eigen::MatrixXi& u) const {
  const int n = dimension();
  if (u.rows() != n || u.cols() != n) throw DomainError("basis change has wrong shape");
  if (std::abs(std::abs(u.cast<double>().determinant()) - 1) > 1e-9)
    throw DomainError("basis change is not unimodular");
  if (exact_) {
    const auto N = static_cast<std::size_t>(n);
    RationalMatrix um(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) um[i * N + j] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return Lattice(n, rational_product(n, um, *exact_), name_);
  }
  return Lattice(u.cast<double>() * basis_, name_);
}

Lattice Lattice::scaled(double factor) const {
  if (!(factor > 0)) throw DomainError("scale factor must be positive");
  return Lattice(basis_ * factor, name_);
}

Lattice zn(int n) {
  if (n < 1) throw DomainError("zn needs n >= 1");
  const auto N = static_cast<std::size_t>(n);
  RationalMatrix b(N * N, Rational(0));
  for (std::size_t i = 0; i < N; ++i) b[i * N + i] = 1;
  return Lattice(n, std::move(b), "zn:" + std::to_string(n));
}

Lattice dn(int n) {
  if (n < 2) throw DomainError("dn needs n >= 2");
  const auto N = static_cast<std::size_t>(n);
  RationalMatrix b(N * N, Rational(0));
  // (-1,-1,0,...), (1,-1,0,...), then e_i - e_{i+1}.
  b[0] = -1;
  b[1] = -1;
  b[N] = 1;
  b[N + 1] = -1;
  for (std::size_t i = 2; i < N; ++i) {
    b[i * N + i - 1] = 1;
    b[i * N + i] = -1;
  }
  return Lattice(n, std::move(b), "dn:" + std::to_string(n));
}

Lattice e8() {
  // Basis of D8 with its last row replaced by the glue vector (1/2)^8.
  constexpr std::size_t N = 8;
  RationalMatrix b(N * N, Rational(0));
  b[0] = 2;
  for (std::size_t i = 1; i < 7; ++i) {
    b[i * N + i - 1] = -1;
    b[i * N + i] = 1;
  }
  for (std::size_t j = 0; j < N; ++j) b[7 * N + j] = Rational(1, 2);
  return Lattice(8, std::move(b), "e8");
}

Lattice hexagonal() {
  Eigen::MatrixXd b(2, 2);
  b << 1, 0, 0.5, std::sqrt(3.0) / 2;
  return Lattice(b, "hexagonal");
}

Lattice lattice_catalog(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto& c : s)
    if (c == '(' || c == ')' || c == '_') c = ':';
  while (!s.empty() && s.back() == ':') s.pop_back();
  if (s == "e8") return e8();
  if (s == "hexagonal" || s == "a2") return hexagonal();
  auto parse_dim = [&](std::size_t prefix) {
    std::string rest = s.substr(prefix);
    if (!rest.empty() && rest[0] == ':') rest.erase(0, 1);
    try {
      std::size_t used = 0;
      const int n = std::stoi(rest, &used);
      if (used != rest.size()) throw ParseError("");
      return n;
    } catch (const std::exception&) {
      throw ParseError("malformed lattice name '" + std::string(name) + "'");
    }
  };
  if (s.rfind("zn", 0) == 0) return zn(parse_dim(2));
  if (s.rfind("dn", 0) == 0) return dn(parse_dim(2));
  if (s.size() > 1 && s[0] == 'z') return zn(parse_dim(1));
  if (s.size() > 1 && s[0] == 'd') return dn(parse_dim(1));
  throw ParseError("unknown lattice '" + std::string(name) + "' (expected zn:N, dn:N, e8, hexagonal)");
}

Lattice dual(const Lattice& l) {
  const int n = l.dimension();
  const std::string name = l.name().empty() ? "" : "dual(" + l.name() + ")";
  if (l.exact_basis()) return Lattice(n, transpose(n, rational_inverse(n, *l.exact_basis())), name);
  return Lattice(l.basis().inverse().transpose(), name);
}

bool same_lattice(const Lattice& a, const Lattice& b, double tol) {
  const int n = a.dimension();
  if (b.dimension() != n) return false;
  if (a.exact_basis() && b.exact_basis()) {
    Rational det;
    const RationalMatrix m = rational_product(n, *b.exact_basis(), rational_inverse(n, *a.exact_basis()));
    for (const auto& x : m)
      if (denominator(x) != 1) return false;
    rational_inverse(n, m, &det);
    return abs(det) == 1;
  }
  const Eigen::MatrixXd m = b.basis() * a.basis().inverse();
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (std::abs(m(i) - std::round(m(i))) > tol) return false;
  return std::abs(std::abs(m.array().round().matrix().determinant()) - 1) < 0.5;
}

std::uint64_t for_each_vector(const Lattice& l, double r2_max, const EnumerationOptions& opt,
                              const std::function<void(const std::vector<std::int64_t>&, double)>& visit) {
  if (!(r2_max >= 0)) throw DomainError("enumeration radius must be nonnegative");
  const int n = l.dimension();
  const Eigen::MatrixXd& g = l.gram();
  const Eigen::MatrixXd r = Eigen::LLT<Eigen::MatrixXd>(g).matrixU();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  if (opt.center) {
    if (opt.center->size() != static_cast<std::size_t>(n)) throw DomainError("center has wrong dimension");
    const Eigen::Map<const Eigen::RowVectorXd> p(opt.center->data(), n);
    c = (p * l.basis().inverse()).transpose();
  }
  const double slack = 1e-9 * std::max(1.0, r2_max);
  const double bound = r2_max + slack;

  std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> hi(static_cast<std::size_t>(n), 0);
  std::vector<double> partial(static_cast<std::size_t>(n) + 1, 0.0);
  std::uint64_t count = 0;

  auto exact_norm = [&](const std::vector<std::int64_t>& zz) {
    Eigen::VectorXd d(n);
    for (int k = 0; k < n; ++k) d(k) = static_cast<double>(zz[static_cast<std::size_t>(k)]) - c(k);
    return d.dot(g * d);
  };
  // Contribution y_i = R_ii (z_i - c_i) + sum_{j>i} R_ij (z_j - c_j).
  auto offset = [&](int i) {
    double s = 0;
    for (int j = i + 1; j < n; ++j) s += r(i, j) * (static_cast<double>(z[static_cast<std::size_t>(j)]) - c(j));
    return s;
  };
  auto init_level = [&](int i) -> bool {
    const double rem = bound - partial[static_cast<std::size_t>(i) + 1];
    if (rem < 0) return false;
    const double center = c(i) - offset(i) / r(i, i);
    const double half = std::sqrt(rem) / r(i, i);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half - 1e-12));
    hi[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(center + half + 1e-12));
    z[static_cast<std::size_t>(i)] = lo - 1;  // advanced before use
    return true;
  };

  int level = n - 1;
  if (!init_level(level)) return 0;
  while (level < n) {
    auto& zi = z[static_cast<std::size_t>(level)];
    ++zi;
    if (zi > hi[static_cast<std::size_t>(level)]) {
      ++level;
      continue;
    }
    const double y = r(level, level) * (static_cast<double>(zi) - c(level)) + offset(level);
    const double part = partial[static_cast<std::size_t>(level) + 1] + y * y;
    if (part > bound) continue;
    if (level == 0) {
      const bool zero = std::all_of(z.begin(), z.end(), [](std::int64_t v) { return v == 0; });
      if (zero && !opt.include_zero) continue;
      const double norm2 = exact_norm(z);
      if (norm2 > bound) continue;
      if (++count > opt.max_count)
        throw BudgetError("lattice enumeration exceeded " + std::to_string(opt.max_count) + " vectors");
      visit(z, norm2);
      continue;
    }
    partial[static_cast<std::size_t>(level)] = part;
    --level;
    if (!init_level(level)) ++level;
  }
  return count;
}

std::vector<LatticeVector> enumerate_vectors(const Lattice& l, double r2_max, const EnumerationOptions& opt) {
  std::vector<LatticeVector> out;
  const int n = l.dimension();
  for_each_vector(l, r2_max, opt, [&](const std::vector<std::int64_t>& z, double norm2) {
    LatticeVector v{z, std::vector<double>(static_cast<std::size_t>(n), 0.0), norm2};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.coords[static_cast<std::size_t>(j)] += static_cast<double>(z[static_cast<std::size_t>(i)]) * l.basis()(i, j);
    out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) { return a.coeffs < b.coeffs; });
  return out;
}

double minimal_norm(const Lattice& l) {
  // Any basis vector bounds the minimum from above.
  const double r2 = l.gram().diagonal().minCoeff();
  double best = std::numeric_limits<double>::infinity();
  for_each_vector(l, r2, {}, [&](const std::vector<std::int64_t>&, double norm2) { best = std::min(best, norm2); });
  return best;
}

std::uint64_t kissing_number(const Lattice& l) {
  const double m = minimal_norm(l);
  std::uint64_t count = 0;
  for_each_vector(l, m * (1 + 1e-9), {}, [&](const std::vector<std::int64_t>&, double) { ++count; });
  return count;
}

double ball_volume(int n, double r) {
  return std::pow(pi<double>(), n / 2.0) / std::tgamma(n / 2.0 + 1) * std::pow(r, n);
}

double packing_density(const Lattice& l) {
  return ball_volume(l.dimension(), std::sqrt(minimal_norm(l)) / 2) / l.covolume();
}

DeepHoleReport deep_hole_check_dn(int n) {
  if (n < 2) throw DomainError("deep_hole_check_dn needs n >= 2");
  const Lattice d = dn(n);
  auto closest = [&](std::vector<double> p, double upper) {
    EnumerationOptions opt;
    opt.include_zero = true;
    opt.center = std::move(p);
    double best = std::numeric_limits<double>::infinity();
    for_each_vector(d, upper, opt, [&](const std::vector<std::int64_t>&, double r2) { best = std::min(best, r2); });
    return std::sqrt(best);
  };
  DeepHoleReport rep{};
  rep.dimension = n;
  // The origin bounds both searches: |h|^2 = n/4 and |e_1|^2 = 1.
  rep.halves_distance = closest(std::vector<double>(static_cast<std::size_t>(n), 0.5), n / 4.0);
  std::vector<double> e1(static_cast<std::size_t>(n), 0.0);
  e1[0] = 1;
  rep.integral_hole_distance = closest(std::move(e1), 1.0);
  rep.covering_candidate = std::max(rep.halves_distance, rep.integral_hole_distance);
  rep.fills_to_e8 = false;
  if (n == 8) {
    // Glue h: 2h lies in D8, |h| equals the minimal distance of D8, and
    // D8 + h is E8, whose covolume is half that of D8.
    const double dmin = std::sqrt(minimal_norm(d));
    const Lattice e = e8();
    const bool glue_in_e8 = [&] {
      const Eigen::RowVectorXd h = Eigen::RowVectorXd::Constant(8, 0.5);
      const Eigen::RowVectorXd z = h * e.basis().inverse();
      return (z.array() - z.array().round()).abs().maxCoeff() < 1e-12;
    }();
    rep.fills_to_e8 = std::abs(rep.halves_distance - dmin) < 1e-12 && glue_in_e8 &&
                      std::abs(d.covolume() - 2 * e.covolume()) < 1e-12 &&
                      std::abs(minimal_norm(e) - dmin * dmin) < 1e-12;
  }
  return rep;
}

double lattice_point_count_bound(int n, double radius, double lambda) {
  return std::pow(2 * radius / lambda + 1, n);
}

namespace {

// Tail of sum_{|x|^2 > T} e^{-pi a |x|^2} over a lattice with minimum lambda,
// bounded shell by shell.
double gaussian_tail_bound(int n, double a, double lambda, double t) {
  const double r0 = std::sqrt(t);
  double total = 0;
  for (int k = 0; k < 100000; ++k) {
    const double inner = r0 + k * lambda;
    const double term = lattice_point_count_bound(n, inner + lambda, lambda) * std::exp(-pi<double>() * a * inner * inner);
    total += term;
    if (k > 2 && term < 1e-40 * std::max(total, 1e-300)) break;
  }
  return total;
}

double required_radius(int n, double a, double lambda, double tolerance) {
  double hi = 1;
  while (gaussian_tail_bound(n, a, lambda, hi) > tolerance) hi *= 2;
  double lo = 0;
  for (int it = 0; it < 60; ++it) {
    const double mid = (lo + hi) / 2;
    (gaussian_tail_bound(n, a, lambda, mid) > tolerance ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

double poisson_truncation_radius(const Lattice& l, double s, double tolerance) {
  if (!(s > 0)) throw DomainError("Gaussian width must be positive");
  const int n = l.dimension();
  const double lam = std::sqrt(minimal_norm(l));
  const double lam_dual = std::sqrt(minimal_norm(dual(l)));
  // Both truncated sums start with the zero term 1, so an absolute tail
  // bound is also relative.
  return std::max(required_radius(n, s, lam, tolerance), required_radius(n, 1 / s, lam_dual, tolerance));
}

PoissonReport poisson_check(const Lattice& l, double s, std::optional<double> trunc_r2) {
  const double required = poisson_truncation_radius(l, s);
  const double t = trunc_r2.value_or(required);
  if (t < required)
    throw TruncationError("truncation radius^2 " + std::to_string(t) + " is below the required " +
                              std::to_string(required),
                          required);
  const int n = l.dimension();
  EnumerationOptions opt;
  opt.include_zero = true;
  CompensatedSum lhs;
  CompensatedSum rhs;
  PoissonReport rep{};
  rep.trunc_r2 = t;
  rep.terms_primal = for_each_vector(l, t, opt, [&](const std::vector<std::int64_t>&, double r2) {
    lhs.add(std::exp(-pi<double>() * s * r2));
  });
  rep.terms_dual = for_each_vector(dual(l), t, opt, [&](const std::vector<std::int64_t>&, double r2) {
    rhs.add(std::exp(-pi<double>() * r2 / s));
  });
  rep.lhs = lhs.value();
  rep.rhs = rhs.value() / (l.covolume() * std::pow(s, n / 2.0));
  rep.discrepancy = std::abs(rep.lhs - rep.rhs) / std::abs(rep.lhs);
  return rep;
}

Lattice read_lattice(std::istream& in, std::string name) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
  }
  if (toks.empty()) throw ParseError("lattice file: missing dimension");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(toks[0], &used);
    if (used != toks[0].size() || n < 1) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("lattice file: first entry must be a positive dimension");
  }
  const auto N = static_cast<std::size_t>(n);
  if (toks.size() != 1 + N * N)
    throw ParseError("lattice file: expected " + std::to_string(N * N) + " basis entries, found " +
                     std::to_string(toks.size() - 1));
  RationalMatrix b;
  b.reserve(N * N);
  for (std::size_t i = 1; i < toks.size(); ++i) b.push_back(parse_rational(toks[i]));
  return Lattice(n, std::move(b), std::move(name));
}

Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file " + path);
  return read_lattice(in, path);
}

}  // namespace optima
