#include "report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "optima/errors.hpp"

namespace optima::cli {

json number(const HighReal& x) {
  const double d = to_double(x);
  if (!std::isfinite(d)) return json(to_string(x, 20));
  return json(d);
}

void put(json& obj, const std::string& key, const HighReal& x, const Precision& p) {
  obj[key] = number(x);
  if (p.high()) obj[key + "_decimal"] = to_string(x, std::min(p.digits, kHighDigits));
}

namespace {

json numbers(const std::vector<HighReal>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(number(x));
  return a;
}

json margins_json(const YudinMargins& m, const Precision& p) {
  json j;
  put(j, "min_alpha", m.min_alpha, p);
  j["min_alpha_index"] = m.min_alpha_index;
  put(j, "min_slack", m.min_slack, p);
  j["min_slack_at"] = number(m.min_slack_at);
  j["error_radius"] = to_string(m.error_radius, 6);
  j["mesh_cells"] = m.cells;
  if (!m.failure.empty()) j["failure"] = m.failure;
  if (m.violation) j["violation"] = {number(m.violation->first), number(m.violation->second)};
  return j;
}

}  // namespace

json certificate_json(const SphericalCertificate& c, const Precision& p) {
  json j;
  j["n"] = c.dimension;
  j["N"] = c.size;
  j["potential"] = c.potential.spec();
  j["nodes"] = numbers(c.nodes);
  j["h_monomial"] = numbers(c.h.coeffs());
  j["alpha"] = numbers(c.expansion.coeffs());
  json bc;
  put(bc, "quadratic", c.bound_quadratic(), p);
  put(bc, "linear", c.bound_linear(), p);
  j["bound_coeffs"] = bc;
  put(j, "bound", c.bound, p);
  put(j, "energy", c.energy, p);
  put(j, "gap", c.gap, p);
  j["slack"] = numbers(c.slack);
  j["margins"] = margins_json(c.margins, p);
  j["design_strength"] = c.design_strength;
  j["precision_digits"] = c.precision_digits;
  j["sharp"] = c.sharp;
  if (p.high()) {
    json exact = json::array();
    for (const auto& x : c.h.coeffs()) exact.push_back(to_string(x, std::min(p.digits, kHighDigits)));
    j["h_monomial_decimal"] = exact;
  }
  return j;
}

json yudin_json(const YudinResult& r, const Precision& p) {
  json j;
  put(j, "bound", r.bound, p);
  j["valid"] = r.valid;
  j["alpha"] = numbers(r.expansion.coeffs());
  j["margins"] = margins_json(r.margins, p);
  return j;
}

json descent_json(const DescentResult& r) {
  json j;
  j["energy"] = r.energy;
  j["best_restart"] = r.best_index;
  j["restart_count"] = r.restarts;
  j["seed"] = r.seed;
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"index", run.index},
                    {"energy", run.energy},
                    {"iterations", run.iterations},
                    {"grad_norm", run.grad_norm},
                    {"converged", run.converged},
                    {"reseeds", run.reseeds}});
  }
  j["restarts"] = runs;
  return j;
}

json aux_json(const RadialAux& aux, const EuclidResult& check) {
  json j;
  j["n"] = aux.dimension;
  j["r_min"] = to_string(aux.r_min, kHighDigits);
  j["scale"] = to_string(aux.scale, kHighDigits);
  j["basis"] = "fourier-eigen";
  json coeffs = json::array();
  for (const auto& c : aux.coeffs) coeffs.push_back(to_string(c, kHighDigits));
  j["coeffs"] = coeffs;
  j["bound"] = number(check.density_bound);
  j["valid"] = check.valid;
  json m;
  m["f0"] = number(check.margins.f0);
  m["fhat0"] = number(check.margins.fhat0);
  if (!check.margins.failure.empty()) m["failure"] = check.margins.failure;
  if (check.margins.violation) {
    m["violation_r2"] = {number(check.margins.violation->first),
                         check.margins.violation->second ? number(*check.margins.violation->second) : json("inf")};
  }
  j["margins"] = m;
  return j;
}

RadialAux read_aux_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open aux file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("aux file " + path + ": " + e.what());
  }
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  try {
    if (j.contains("basis") && j["basis"] != "fourier-eigen")
      throw ParseError("aux file " + path + ": unsupported basis " + j["basis"].dump());
    RadialAux aux;
    aux.dimension = j.at("n").get<int>();
    aux.r_min = j.contains("r_min") ? parse_high(text(j["r_min"])) : HighReal(1);
    aux.scale = j.contains("scale") ? parse_high(text(j["scale"])) : HighReal(1);
    for (const auto& c : j.at("coeffs")) aux.coeffs.push_back(parse_high(text(c)));
    return aux;
  } catch (const json::exception& e) {
    throw ParseError("aux file " + path + ": " + e.what());
  }
}

namespace {

void flatten(std::ostream& out, const std::string& prefix, const json& v) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(out, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(out, prefix + "." + std::to_string(i), v[i]);
  } else if (v.is_string()) {
    out << prefix << "," << v.get<std::string>() << "\n";
  } else {
    out << prefix << "," << v.dump() << "\n";
  }
}

}  // namespace

void write_csv(std::ostream& out, const json& results) {
  out << "key,value\n";
  flatten(out, "", results);
}

}  // namespace optima::cli
