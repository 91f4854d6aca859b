#include "optima/potential.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "optima/errors.hpp"

namespace optima {

namespace {

template <class T>
void check_domain(const T& r2) {
  // Rounding can push an antipodal pair marginally past 4.
  if (!(r2 > T(0)) || r2 > T(4) + T(1e-9)) {
    std::ostringstream os;
    os << "squared distance " << to_double(r2) << " outside (0, 4]";
    throw DomainError(os.str());
  }
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

HighReal keyed_value(const std::string& body, const std::string& key, const std::string& whole) {
  // Accept "s=0.5" or a bare "0.5".
  std::string v = body;
  if (body.rfind(key + "=", 0) == 0) v = body.substr(key.size() + 1);
  if (v.empty()) throw ParseError("potential '" + whole + "' is missing " + key);
  return parse_high(v);
}

}  // namespace

Potential::Potential(Kind kind, HighReal param, Polynomial<Rational> poly)
    : kind_(kind), param_(std::move(param)), param_d_(to_double(param_)), poly_(std::move(poly)) {}

Potential Potential::inverse_power(const HighReal& s) {
  if (!(s > 0)) throw DomainError("inverse-power exponent must be positive");
  return Potential(Kind::inverse_power, s, {});
}

Potential Potential::gaussian(const HighReal& c) {
  if (!(c > 0)) throw DomainError("gaussian rate must be positive");
  return Potential(Kind::gaussian, c, {});
}

Potential Potential::logarithmic() { return Potential(Kind::log, HighReal(0), {}); }

Potential Potential::poly_in_t(Polynomial<Rational> p) { return Potential(Kind::poly_in_t, HighReal(0), std::move(p)); }

Potential Potential::parse(std::string_view spec) {
  const std::string s = lower(spec);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "coulomb") return inverse_power(HighReal(1) / 2);
  if (head == "inverse-power" || head == "inverse_power" || head == "riesz") return inverse_power(keyed_value(body, "s", s));
  if (head == "gaussian") return gaussian(keyed_value(body, "c", s));
  if (head == "log") return logarithmic();
  if (head == "poly-t" || head == "poly_t") {
    std::string list = body;
    if (list.size() < 2 || list.front() != '[' || list.back() != ']')
      throw ParseError("poly-t potential expects a list like [c0,c1,...]");
    list = list.substr(1, list.size() - 2);
    std::vector<Rational> coeffs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    return poly_in_t(Polynomial<Rational>(std::move(coeffs)));
  }
  throw ParseError("unknown potential '" + std::string(spec) + "'");
}

std::string Potential::spec() const {
  switch (kind_) {
    case Kind::inverse_power:
      return "inverse-power:s=" + to_string(param_, 17);
    case Kind::gaussian:
      return "gaussian:c=" + to_string(param_, 17);
    case Kind::log:
      return "log";
    case Kind::poly_in_t: {
      std::string out = "poly-t:[";
      for (std::size_t k = 0; k < poly_.coeffs().size(); ++k) out += (k ? "," : "") + to_string(poly_.coeffs()[k]);
      if (poly_.is_zero()) out += "0";
      return out + "]";
    }
  }
  return {};
}

template <class T>
T Potential::derivative(const T& r2, int order) const {
  using std::exp;
  using std::log;
  using std::pow;
  check_domain(r2);
  if (order < 0) throw DomainError("derivative order must be >= 0");
  const T p = [&] {
    if constexpr (std::is_same_v<T, double>) return param_d_;
    else return T(param_);
  }();
  switch (kind_) {
    case Kind::inverse_power: {
      // f^(k)(r) = (-1)^k (s)_k r^{-s-k}
      T rising(1);
      for (int j = 0; j < order; ++j) rising *= p + T(j);
      const T v = rising * pow(r2, -p - T(order));
      return order % 2 == 0 ? v : T(-v);
    }
    case Kind::gaussian: {
      const T v = pow(p, T(order)) * exp(-p * r2);
      return order % 2 == 0 ? v : T(-v);
    }
    case Kind::log: {
      if (order == 0) return -log(r2) / T(2);
      // f^(k)(r) = -(1/2) (-1)^{k-1} (k-1)! r^{-k}
      T fact(1);
      for (int j = 2; j < order; ++j) fact *= T(j);
      const T v = fact / (T(2) * pow(r2, T(order)));
      return order % 2 == 0 ? v : T(-v);
    }
    case Kind::poly_in_t: {
      // f(r) = p(1 - r/2), so f^(k)(r) = (-1/2)^k p^(k)(1 - r/2).
      const T t = T(1) - r2 / T(2);
      T v = poly_.derivative(order)(t);
      for (int j = 0; j < order; ++j) v /= T(-2);
      return v;
    }
  }
  return T(0);
}

template <class T>
T Potential::half_form(const T& t, int order) const {
  // d^k/dt^k f(2 - 2t)/2 = (-2)^k f^(k)(2 - 2t) / 2
  T v = derivative(T(T(2) - T(2) * t), order) / T(2);
  for (int j = 0; j < order; ++j) v *= T(-2);
  return v;
}

template double Potential::derivative<double>(const double&, int) const;
template HighReal Potential::derivative<HighReal>(const HighReal&, int) const;
template double Potential::half_form<double>(const double&, int) const;
template HighReal Potential::half_form<HighReal>(const HighReal&, int) const;

HighReal energy(const Configuration& c, const Potential& f) {
  HighReal total = 0;
  const int n = c.dimension();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto x = c.point(i);
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto y = c.point(j);
      HighReal r2 = 0;
      for (int d = 0; d < n; ++d) {
        const HighReal diff = x[static_cast<std::size_t>(d)] - y[static_cast<std::size_t>(d)];
        r2 += diff * diff;
      }
      if (r2 == 0) throw DomainError("coincident points in energy evaluation");
      total += f.value(r2);
    }
  }
  return total;
}

HighReal energy(const DistanceDistribution& dist, const Potential& f) {
  HighReal total = 0;
  // The last entry is t = 1 (the diagonal).
  for (std::size_t i = 0; i + 1 < dist.entries.size(); ++i) {
    const auto& [t, count] = dist.entries[i];
    total += f.half_form(t) * HighReal(count);
  }
  return total;
}

double energy(int dimension, std::span<const double> coords, const Potential& f) {
  const std::size_t n = static_cast<std::size_t>(dimension);
  const std::size_t count = coords.size() / n;
  double total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      double r2 = 0;
      for (std::size_t d = 0; d < n; ++d) {
        const double diff = coords[i * n + d] - coords[j * n + d];
        r2 += diff * diff;
      }
      if (r2 == 0) throw DomainError("coincident points in energy evaluation");
      total += f.value(r2);
    }
  }
  return total;
}

}  // namespace optima
