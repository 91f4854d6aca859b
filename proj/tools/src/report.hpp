#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "optima/descent.hpp"
#include "optima/lp_euclid.hpp"
#include "optima/lp_sphere.hpp"
#include "optima/numeric.hpp"

namespace optima::cli {

using nlohmann::json;

/// Numeric output precision. Values are always JSON numbers (doubles); in
/// high-precision mode selected fields also carry a decimal string.
struct Precision {
  int digits = 17;
  bool high() const { return digits >= 60; }
};

json number(const HighReal& x);
void put(json& obj, const std::string& key, const HighReal& x, const Precision& p);

json certificate_json(const SphericalCertificate& c, const Precision& p);
json yudin_json(const YudinResult& r, const Precision& p);
json descent_json(const DescentResult& r);
json aux_json(const RadialAux& aux, const EuclidResult& check);
RadialAux read_aux_file(const std::string& path);

/// One "key,value" row per scalar leaf; nested keys are joined with '.'.
void write_csv(std::ostream& out, const json& results);

}  // namespace optima::cli
