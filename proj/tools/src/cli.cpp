#include "optima_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "optima/config.hpp"
#include "optima/descent.hpp"
#include "optima/errors.hpp"
#include "optima/lattice.hpp"
#include "optima/lp_euclid.hpp"
#include "optima/lp_sphere.hpp"
#include "optima/points_io.hpp"
#include "optima/potential.hpp"
#include "optima/reference.hpp"
#include "optima/saturation.hpp"
#include "report.hpp"

namespace optima::cli {

namespace {

struct Context {
  Precision precision;
  std::uint64_t seed = 0;
  bool quiet = false;
  std::ostream* err = nullptr;
  std::vector<std::string> artifacts;

  void note(const std::string& msg) const {
    if (!quiet) *err << msg << "\n";
  }
};

// Thrown by a command to request exit code 2 while still emitting a report.
struct ValidationFailure {
  json results;
  std::string message;
};

std::ofstream open_artifact(Context& ctx, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  ctx.artifacts.push_back(path);
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(to_double(parse_rational(tok)));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(parse_rational(tok));
  if (out.empty()) throw ParseError("empty coefficient list '" + text + "'");
  return out;
}

struct ConfigSource {
  std::string config;
  std::string points_file;
  bool renormalize = false;

  void add(CLI::App* sub) {
    sub->add_option("--config", config, "catalog configuration (ngon:N, simplex:n, cross-polytope:n, icosahedron, e8-roots)");
    sub->add_option("--points-file", points_file, "points file");
    sub->add_flag("--renormalize", renormalize, "rescale points file rows to unit length");
  }

  Configuration load() const {
    if (!config.empty() && !points_file.empty()) throw ParseError("--config and --points-file are exclusive");
    if (!config.empty()) return catalog(config);
    if (!points_file.empty()) return load_configuration(points_file, renormalize);
    throw ParseError("one of --config or --points-file is required");
  }
};

json spectrum_json(const Configuration& c) {
  json j;
  const InnerProductSpectrum spec = inner_product_spectrum(c);
  j["m"] = spec.m;
  json vals = json::array();
  for (const auto& v : spec.values) vals.push_back(number(v));
  j["values"] = vals;
  const DistanceDistribution dist = distance_distribution(c);
  json dd = json::array();
  for (const auto& [t, count] : dist.entries) dd.push_back({{"t", number(t)}, {"count", count}});
  j["distance_distribution"] = dd;
  return j;
}

// ---- catalog -------------------------------------------------------------

struct CatalogCmd {
  ConfigSource src;
  bool references = false;
  bool list = false;
  std::string points_out;
  int design_max = 12;

  void add(CLI::App* sub) {
    src.add(sub);
    sub->add_flag("--references", references, "print the reference constants table");
    sub->add_flag("--list", list, "list catalog names");
    sub->add_option("--points-out", points_out, "write the configuration as a points file");
    sub->add_option("--design-max", design_max, "largest degree tested for the design strength");
  }

  json run(Context& ctx) const {
    json r = json::object();
    if (list) r["configurations"] = {"ngon:N", "simplex:n", "cross-polytope:n", "icosahedron", "e8-roots"};
    if (references) {
      json t = json::array();
      for (const auto& c : reference_constants())
        t.push_back({{"key", c.key}, {"exact", c.exact}, {"value", c.value}, {"provenance", c.provenance}});
      r["references"] = t;
    }
    if (!src.config.empty() || !src.points_file.empty()) {
      const Configuration c = src.load();
      r["name"] = c.name();
      r["n"] = c.dimension();
      r["N"] = c.size();
      r["spectrum"] = spectrum_json(c);
      if (c.dimension() >= 2) r["design_strength"] = design_strength(c, design_max);
      if (!points_out.empty()) {
        auto out = open_artifact(ctx, points_out);
        write_points(out, c, std::max(20, ctx.precision.digits));
      }
    }
    if (r.empty()) throw ParseError("catalog needs --config, --points-file, --list or --references");
    return r;
  }
};

// ---- energy --------------------------------------------------------------

struct EnergyCmd {
  ConfigSource src;
  std::string potential;

  void add(CLI::App* sub) {
    src.add(sub);
    sub->add_option("--potential", potential, "potential spec")->required();
  }

  json run(Context& ctx) const {
    const Configuration c = src.load();
    const Potential f = Potential::parse(potential);
    json r;
    r["n"] = c.dimension();
    r["N"] = c.size();
    r["potential"] = f.spec();
    if (ctx.precision.high()) {
      put(r, "energy", energy(c, f), ctx.precision);
      r["path"] = "high";
    } else {
      const std::vector<double> x = c.coords_double();
      r["energy"] = energy(c.dimension(), x, f);
      r["path"] = "double";
    }
    return r;
  }
};

// ---- minimize ------------------------------------------------------------

struct MinimizeCmd {
  DescentOptions opt;
  std::string potential = "coulomb";
  std::string points_out;

  void add(CLI::App* sub) {
    sub->add_option("--n", opt.dimension, "ambient dimension")->required();
    sub->add_option("--N", opt.count, "number of points")->required();
    sub->add_option("--potential", potential, "potential spec");
    sub->add_option("--restarts", opt.restarts, "random starts");
    sub->add_option("--max-iters", opt.max_iters, "iterations per start");
    sub->add_option("--grad-tol", opt.grad_tol, "Riemannian gradient tolerance");
    sub->add_option("--points-out", points_out, "write the best configuration");
  }

  json run(Context& ctx) const {
    DescentOptions o = opt;
    o.seed = ctx.seed;
    const Potential f = Potential::parse(potential);
    const DescentResult res = minimize_energy(o, f);
    json r = descent_json(res);
    r["potential"] = f.spec();
    if (o.dimension == 3 && o.count == 5) r["classification"] = to_string(classify_five_points(res));
    r["spectrum_m"] = inner_product_spectrum(res.best, 1e-6).m;
    if (!points_out.empty()) {
      auto out = open_artifact(ctx, points_out);
      write_points(out, res.best, std::max(20, ctx.precision.digits));
    }
    return r;
  }
};

// ---- certify -------------------------------------------------------------

struct CertifyCmd {
  ConfigSource src;
  std::string potential;
  double sharp_tol = 1e-9;
  std::string certificate_out;

  void add(CLI::App* sub) {
    src.add(sub);
    sub->add_option("--potential", potential, "completely monotonic potential spec")->required();
    sub->add_option("--sharp-tol", sharp_tol, "relative gap accepted as sharp");
    sub->add_option("--certificate-out", certificate_out, "write the certificate JSON");
  }

  json run(Context& ctx) const {
    const Configuration c = src.load();
    const Potential f = Potential::parse(potential);
    CertificateOptions co;
    co.sharp_tol = sharp_tol;
    try {
      const SphericalCertificate cert = hermite_certificate(c, f, co);
      json r = certificate_json(cert, ctx.precision);
      if (!certificate_out.empty()) {
        auto out = open_artifact(ctx, certificate_out);
        out << r.dump(2) << "\n";
      }
      return r;
    } catch (const PreconditionError& e) {
      throw ValidationFailure{{{"valid", false}, {"failure", e.what()}}, e.what()};
    } catch (const VerificationError& e) {
      throw ValidationFailure{{{"valid", false}, {"failure", e.what()}}, e.what()};
    }
  }
};

// ---- bound-sphere --------------------------------------------------------

struct BoundSphereCmd {
  int n = 3;
  std::size_t count = 2;
  std::string potential;
  std::string h;
  std::vector<std::string> breakpoints;

  void add(CLI::App* sub) {
    sub->add_option("--n", n, "ambient dimension")->required();
    sub->add_option("--N", count, "number of points")->required();
    sub->add_option("--potential", potential, "potential spec")->required();
    sub->add_option("--coeffs", h, "auxiliary polynomial, monomial coefficients c0,c1,... (rational or decimal)")->required();
    sub->add_option("--touch", breakpoints, "points where h may touch f(2-2t)/2");
  }

  json run(Context& ctx) const {
    const Potential f = Potential::parse(potential);
    const Polynomial<Rational> hp(parse_rational_list(h));
    YudinOptions yo;
    for (const auto& b : breakpoints) yo.breakpoints.push_back(parse_high(b));
    const YudinResult res = yudin_bound(n, f, hp, count, yo);
    json r = yudin_json(res, ctx.precision);
    r["n"] = n;
    r["N"] = count;
    r["potential"] = f.spec();
    if (!res.valid) throw ValidationFailure{r, "auxiliary polynomial is not valid: " + res.margins.failure};
    return r;
  }
};

// ---- bound-euclidean -----------------------------------------------------

struct BoundEuclideanCmd {
  OptimizeOptions opt;
  std::string strategy = "hybrid";
  std::string aux_file;
  std::string aux_out;
  std::string f_roots;
  std::string fhat_roots;
  bool taylor = false;

  void add(CLI::App* sub) {
    sub->add_option("--n", opt.dimension, "dimension");
    sub->add_option("--degree", opt.degree, "maximum polynomial degree in |x|^2");
    sub->add_option("--strategy", strategy, "forced-roots, nelder-mead or hybrid");
    sub->add_option("--polish-iters", opt.polish_iterations, "Nelder-Mead iterations");
    sub->add_option("--f-roots", f_roots, "double roots of f, squared radii in natural units");
    sub->add_option("--fhat-roots", fhat_roots, "double roots of the transform");
    sub->add_option("--aux-file", aux_file, "verify an existing aux JSON instead of optimizing");
    sub->add_option("--aux-out", aux_out, "write the auxiliary function JSON");
    sub->add_flag("--taylor", taylor, "report the Taylor coefficient probe");
  }

  json run(Context& ctx) const {
    RadialAux aux;
    EuclidResult check;
    json r;
    if (!aux_file.empty()) {
      aux = read_aux_file(aux_file);
      check = verify_and_bound(aux);
    } else {
      OptimizeOptions o = opt;
      o.seed = ctx.seed;
      o.strategy = parse_aux_strategy(strategy);
      if (!f_roots.empty()) o.f_roots = parse_list(f_roots);
      if (!fhat_roots.empty()) o.fhat_roots = parse_list(fhat_roots);
      try {
        OptimizedAux res = optimize_aux(o);
        aux = res.aux;
        check = res.check;
        r["effective_degree"] = res.effective_degree;
        r["strategy"] = to_string(o.strategy);
        r["f_roots"] = res.f_roots;
        r["fhat_roots"] = res.fhat_roots;
        r["polished"] = res.polished;
        r["evaluations"] = res.evaluations;
      } catch (const VerificationError& e) {
        throw ValidationFailure{{{"valid", false}, {"failure", e.what()}}, e.what()};
      }
    }
    const double ref = reference_density(aux.dimension);
    r["n"] = aux.dimension;
    put(r, "bound", check.density_bound, ctx.precision);
    r["valid"] = check.valid;
    r["reference_density"] = ref;
    r["ratio"] = to_double(check.density_bound) / ref;
    r["aux"] = aux_json(aux, check);
    if (taylor && check.valid) {
      const TaylorProbe t = taylor_probe(aux);
      r["taylor"] = {{"g_quadratic", t.g_quadratic},
                     {"ghat_quadratic", t.ghat_quadratic},
                     {"g_quartic", t.g_quartic},
                     {"ghat_quartic", t.ghat_quartic},
                     {"mu", t.mu}};
    }
    if (!aux_out.empty()) {
      auto out = open_artifact(ctx, aux_out);
      out << aux_json(aux, check).dump(2) << "\n";
      r["aux_file"] = aux_out;
    }
    if (!check.valid) throw ValidationFailure{r, "auxiliary function is not valid: " + check.margins.failure};
    return r;
  }
};

// ---- poisson -------------------------------------------------------------

struct LatticeSource {
  std::string name;
  std::string file;

  void add(CLI::App* sub, const std::string& flag) {
    sub->add_option(flag, name, "lattice name (zn:N, dn:N, e8, hexagonal)");
    sub->add_option("--lattice-file", file, "lattice basis file");
  }

  Lattice load() const {
    if (!name.empty() && !file.empty()) throw ParseError("lattice name and --lattice-file are exclusive");
    if (!name.empty()) return lattice_catalog(name);
    if (!file.empty()) return read_lattice_file(file);
    throw ParseError("a lattice name or --lattice-file is required");
  }
};

struct PoissonCmd {
  LatticeSource src;
  double width = 1;
  std::optional<double> trunc_r2;

  void add(CLI::App* sub) {
    src.add(sub, "--lattice");
    sub->add_option("--width", width, "Gaussian width s in exp(-pi s |x|^2)");
    sub->add_option("--trunc-r2", trunc_r2, "truncation radius squared (default: from the tail bound)");
  }

  json run(Context&) const {
    const Lattice l = src.load();
    try {
      const PoissonReport rep = poisson_check(l, width, trunc_r2);
      return {{"lattice", l.name()},   {"width", width},           {"lhs", rep.lhs},
              {"rhs", rep.rhs},        {"discrepancy", rep.discrepancy}, {"trunc_r2", rep.trunc_r2},
              {"terms_primal", rep.terms_primal}, {"terms_dual", rep.terms_dual}};
    } catch (const TruncationError& e) {
      throw ValidationFailure{{{"failure", e.what()}, {"required_r2", e.required_r2()}}, e.what()};
    }
  }
};

// ---- saturate ------------------------------------------------------------

struct SaturateCmd {
  SaturationOptions opt;
  int runs = 1;
  std::string points_out;

  void add(CLI::App* sub) {
    sub->add_option("--n", opt.dimension, "dimension (1, 2 or 3)");
    sub->add_option("--box", opt.box, "torus edge length L");
    sub->add_option("--radius", opt.radius, "sphere radius r");
    sub->add_option("--resolution", opt.probe_resolution, "probe grid spacing (<= r/4)");
    sub->add_option("--runs", runs, "independent runs with seeds seed, seed+1, ...");
    sub->add_option("--points-out", points_out, "write the centers of the first run");
  }

  json run(Context& ctx) const {
    if (runs < 1) throw ParseError("--runs must be positive");
    json list = json::array();
    double sum = 0;
    bool all_ok = true;
    const double bound = slack_adjusted_bound(opt.dimension, opt.radius, opt.probe_resolution);
    for (int i = 0; i < runs; ++i) {
      SaturationOptions o = opt;
      o.seed = ctx.seed + static_cast<std::uint64_t>(i);
      const TorusPacking p = saturate(o);
      const bool ok = p.saturated && p.density >= bound;
      all_ok = all_ok && ok;
      sum += p.density;
      list.push_back({{"seed", o.seed},
                      {"count", p.count()},
                      {"density", p.density},
                      {"saturated", p.saturated},
                      {"min_pair_distance", min_pair_distance(p)},
                      {"above_bound", ok}});
      if (i == 0 && !points_out.empty()) {
        auto out = open_artifact(ctx, points_out);
        write_torus_points(out, p.dimension, p.box, p.radius, p.centers);
      }
    }
    json r{{"n", opt.dimension}, {"box", opt.box}, {"radius", opt.radius}, {"resolution", opt.probe_resolution},
           {"runs", list},       {"mean_density", sum / runs}, {"slack_adjusted_bound", bound},
           {"all_above_bound", all_ok}};
    if (!all_ok) throw ValidationFailure{r, "a run fell below the slack-adjusted bound"};
    return r;
  }
};

// ---- lattice -------------------------------------------------------------

struct LatticeCmd {
  LatticeSource src;
  bool kissing = false;
  bool density = false;
  bool show_dual = false;
  bool basis = false;
  std::optional<int> deep_hole;
  std::optional<double> enumerate;

  void add(CLI::App* sub) {
    src.add(sub, "--name");
    sub->add_flag("--kissing", kissing, "count minimal vectors");
    sub->add_flag("--density", density, "packing density");
    sub->add_flag("--dual", show_dual, "dual basis");
    sub->add_flag("--basis", basis, "print the basis and Gram matrix");
    sub->add_option("--deep-hole", deep_hole, "deep-hole check for D_n");
    sub->add_option("--enumerate", enumerate, "list vectors with |v|^2 <= R2");
  }

  static json matrix(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    return rows;
  }

  json run(Context&) const {
    json r = json::object();
    if (deep_hole) {
      const DeepHoleReport d = deep_hole_check_dn(*deep_hole);
      r["deep_hole"] = {{"n", d.dimension},
                        {"halves_distance", d.halves_distance},
                        {"integral_hole_distance", d.integral_hole_distance},
                        {"fills_to_e8", d.fills_to_e8}};
      if (src.name.empty() && src.file.empty()) return r;
    }
    const Lattice l = src.load();
    const bool any = kissing || density || show_dual || basis || enumerate;
    r["lattice"] = l.name();
    r["n"] = l.dimension();
    r["covolume"] = l.covolume();
    if (kissing || !any) r["minimal_vectors"] = kissing_number(l);
    if (density || !any) {
      r["min_norm"] = minimal_norm(l);
      r["packing_density"] = packing_density(l);
    }
    if (basis) {
      r["basis"] = matrix(l.basis());
      r["gram"] = matrix(l.gram());
    }
    if (show_dual) {
      const Lattice d = dual(l);
      r["dual_basis"] = matrix(d.basis());
      r["dual_covolume"] = d.covolume();
    }
    if (enumerate) {
      json vs = json::array();
      for (const auto& v : enumerate_vectors(l, *enumerate)) vs.push_back({{"coeffs", v.coeffs}, {"norm2", v.norm2}});
      r["vectors"] = vs;
      r["count"] = vs.size();
    }
    return r;
  }
};

json collect_parameters(const CLI::App* app) {
  json p = json::object();
  for (const CLI::Option* o : app->get_options()) {
    if (o->count() == 0 || o->get_lnames().empty()) continue;
    const std::string key = o->get_lnames().front();
    if (key == "help") continue;
    const auto res = o->results();
    if (o->get_expected_max() == 0) p[key] = true;
    else if (res.size() == 1) p[key] = res.front();
    else p[key] = res;
  }
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Energies, universal-optimality certificates and packing bounds for point configurations", "optima"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  std::optional<int> precision;
  bool quiet = false;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "write the report to a file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--precision", precision, "decimal digits; >= 60 selects the 120-digit path");
  app.add_flag("--quiet", quiet, "suppress diagnostics");

  CatalogCmd catalog_cmd;
  EnergyCmd energy_cmd;
  MinimizeCmd minimize_cmd;
  CertifyCmd certify_cmd;
  BoundSphereCmd bound_sphere_cmd;
  BoundEuclideanCmd bound_euclid_cmd;
  PoissonCmd poisson_cmd;
  SaturateCmd saturate_cmd;
  LatticeCmd lattice_cmd;

  std::map<CLI::App*, std::function<json(Context&)>> handlers;
  auto reg = [&](const char* name, const char* desc, auto& cmd) {
    CLI::App* sub = app.add_subcommand(name, desc);
    cmd.add(sub);
    handlers[sub] = [&cmd](Context& ctx) { return cmd.run(ctx); };
  };
  reg("catalog", "describe catalog configurations and reference constants", catalog_cmd);
  reg("energy", "potential energy of a configuration", energy_cmd);
  reg("minimize", "multi-start energy descent on the sphere", minimize_cmd);
  reg("certify", "universal-optimality certificate by Hermite interpolation", certify_cmd);
  reg("bound-sphere", "Yudin energy lower bound for a given auxiliary polynomial", bound_sphere_cmd);
  reg("bound-euclidean", "sphere packing density upper bound", bound_euclid_cmd);
  reg("poisson", "Poisson summation check on a lattice", poisson_cmd);
  reg("saturate", "saturated random packing on a torus", saturate_cmd);
  reg("lattice", "lattice facts: kissing number, density, dual, deep holes", lattice_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  Context ctx;
  ctx.seed = seed;
  ctx.quiet = quiet;
  ctx.err = &err;
  if (!precision) {
    if (const char* env = std::getenv("OPTIMA_PRECISION")) {
      try {
        precision = std::stoi(env);
      } catch (const std::exception&) {
        err << "error: OPTIMA_PRECISION must be an integer\n";
        return kUsage;
      }
    }
  }
  ctx.precision.digits = precision.value_or(17);
  if (ctx.precision.digits < 1) {
    err << "error: --precision must be positive\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  json report;
  report["command"] = sub->get_name();
  json params = collect_parameters(sub);
  const json globals = collect_parameters(&app);
  for (const auto& [k, v] : globals.items()) params[k] = v;
  report["parameters"] = params;
  report["seed"] = seed;
  report["precision_digits"] = ctx.precision.high() ? kHighDigits : 17;

  int code = kSuccess;
  try {
    report["results"] = handlers.at(sub)(ctx);
  } catch (const ValidationFailure& v) {
    report["results"] = v.results;
    ctx.note("validation failed: " + v.message);
    code = kValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClusterAmbiguityError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    report["results"] = {{"failure", e.what()}};
    ctx.note(std::string("validation failed: ") + e.what());
    code = kValidation;
  }
  report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["artifacts"] = ctx.artifacts;

  std::ofstream file;
  std::ostream* dest = &out;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kUsage;
    }
    dest = &file;
  }
  if (format == "csv") write_csv(*dest, report["results"]);
  else *dest << report.dump(2) << "\n";
  return code;
}

}  // namespace optima::cli
