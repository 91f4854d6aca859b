#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>

namespace oracle {

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 10, tol);
}

double sphere_integral(int n, const std::function<double(double)>& f) {
  return integrate([&](double u) { return f(std::cos(u)) * std::pow(std::sin(u), n - 2); }, 0, std::numbers::pi);
}

double monic_gegenbauer(int n, int k, double t) {
  const double lambda = (n - 2) / 2.0;
  // Leading coefficient of C_k^lambda is 2^k (lambda)_k / k!.
  const double lead = std::pow(2.0, k) * boost::math::rising_factorial(lambda, static_cast<unsigned>(k)) /
                      boost::math::factorial<double>(static_cast<unsigned>(k));
  return boost::math::gegenbauer(static_cast<unsigned>(k), lambda, t) / lead;
}

double sphere_weight(int n, double t) { return std::pow(1 - t * t, (n - 3) / 2.0); }

std::vector<double> e8_unit_roots() {
  std::vector<double> out;
  const double a = 1 / std::sqrt(2.0);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          std::vector<double> v(8, 0.0);
          v[i] = si * a;
          v[j] = sj * a;
          out.insert(out.end(), v.begin(), v.end());
        }
  const double h = 0.5 / std::sqrt(2.0);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    for (int i = 0; i < 8; ++i) out.push_back((mask >> i & 1) ? -h : h);
  }
  return out;
}

std::vector<double> icosahedron_points() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double norm = std::sqrt(1 + phi * phi);
  std::vector<double> out;
  for (int s1 = -1; s1 <= 1; s1 += 2)
    for (int s2 = -1; s2 <= 1; s2 += 2) {
      const double p[3] = {0, s1 / norm, s2 * phi / norm};
      for (int rot = 0; rot < 3; ++rot)
        for (int i = 0; i < 3; ++i) out.push_back(p[(i + rot) % 3]);
    }
  return out;
}

Histogram brute_force_distribution(int dim, const std::vector<double>& x, double tol) {
  const std::size_t n = x.size() / static_cast<std::size_t>(dim);
  std::vector<double> all;
  all.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (int d = 0; d < dim; ++d) s += x[i * dim + d] * x[j * dim + d];
      all.push_back(s);
    }
  std::sort(all.begin(), all.end());
  Histogram h;
  for (double t : all) {
    if (!h.t.empty() && t - h.t.back() <= tol) {
      ++h.count.back();
    } else {
      h.t.push_back(t);
      h.count.push_back(1);
    }
  }
  return h;
}

double pair_energy(int dim, const std::vector<double>& x, const std::function<double(double)>& f) {
  const std::size_t n = x.size() / static_cast<std::size_t>(dim);
  double e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double r2 = 0;
      for (int d = 0; d < dim; ++d) r2 += (x[i * dim + d] - x[j * dim + d]) * (x[i * dim + d] - x[j * dim + d]);
      e += f(r2);
    }
  return e;
}

std::vector<std::vector<double>> box_vectors(const std::vector<std::vector<double>>& basis, int box, double r2) {
  const std::size_t n = basis.size();
  std::vector<int> c(n, -box);
  std::vector<std::vector<double>> out;
  while (true) {
    std::vector<double> v(basis[0].size(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < v.size(); ++d) v[d] += c[i] * basis[i][d];
    double s = 0;
    for (double y : v) s += y * y;
    if (s <= r2 + 1e-9) out.push_back(v);
    std::size_t i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

double radial_fourier(int n, const std::function<double(double)>& f, double s, double r_max) {
  const double nu = n / 2.0 - 1;
  const double pi = std::numbers::pi;
  if (s == 0) {
    // Surface area of S^{n-1} times int f(r) r^{n-1} dr.
    const double area = 2 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
    return area * integrate([&](double r) { return f(r) * std::pow(r, n - 1); }, 0, r_max);
  }
  auto g = [&](double r) {
    return f(r) * boost::math::cyl_bessel_j(nu, 2 * pi * r * s) * std::pow(r, n / 2.0);
  };
  // Split the range so each piece spans a few oscillations.
  const int pieces = std::max(8, static_cast<int>(4 * r_max * s));
  double total = 0;
  for (int i = 0; i < pieces; ++i) total += integrate(g, r_max * i / pieces, r_max * (i + 1) / pieces);
  return 2 * pi * std::pow(s, 1 - n / 2.0) * total;
}

double theta(double s) {
  double sum = 1;
  for (int k = 1; k < 1000; ++k) {
    const double term = 2 * std::exp(-std::numbers::pi * s * k * k);
    sum += term;
    if (term < 1e-30) break;
  }
  return sum;
}

}  // namespace oracle
