#include "tubenum/sim/experiment.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "tubenum/calculus/json.hpp"

namespace tubenum {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(path.empty() ? "/" : path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : obj.items()) {
    if (!ok.count(k)) throw ConfigError(path + "/" + k, "unknown key");
  }
}

std::int64_t integer_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<std::int64_t>();
}

/// Numbers, or strings holding a rational or decimal literal.
Rational rational_at(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number()) {
      std::ostringstream os;
      os << std::setprecision(17) << v.get<double>();
      return Rational::parse(os.str());
    }
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(path, "expected a number or a rational string");
}

double number_at(const json& v, const std::string& path) { return rational_at(v, path).to_double(); }

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

void parse_generator(const json& g, ExperimentConfig& c) {
  only_keys(g, "/generator", {"name", "params"});
  if (!g.contains("name")) throw ConfigError("/generator/name", "missing");
  c.generator.name = string_at(g["name"], "/generator/name");
  static const std::set<std::string> names = {"single", "bush", "hairbrush", "plany_slab", "random"};
  if (!names.count(c.generator.name)) throw ConfigError("/generator/name", "unknown generator '" + c.generator.name + "'");
  if (!g.contains("params")) return;
  const json& p = g["params"];
  const std::string base = "/generator/params";
  only_keys(p, base, {"count", "m", "rho_cells", "direction"});
  if (p.contains("count")) {
    if (p["count"].is_string() && p["count"].get<std::string>() == "all") {
      c.generator.all_directions = true;
    } else {
      const auto n = integer_at(p["count"], base + "/count");
      if (n < 1) throw ConfigError(base + "/count", "must be positive");
      c.generator.count = n;
    }
  }
  if (p.contains("m")) {
    const auto m = integer_at(p["m"], base + "/m");
    if (m < 1 || m > 1 << 20) throw ConfigError(base + "/m", "must be a positive integer");
    c.generator.m = static_cast<int>(m);
  }
  if (p.contains("rho_cells")) {
    c.generator.rho_cells = number_at(p["rho_cells"], base + "/rho_cells");
    if (!(c.generator.rho_cells > 0)) throw ConfigError(base + "/rho_cells", "must be positive");
  }
  if (p.contains("direction")) {
    const json& d = p["direction"];
    if (!d.is_array() || static_cast<int>(d.size()) != c.dim) {
      throw ConfigError(base + "/direction", "expected an array of " + std::to_string(c.dim) + " numbers");
    }
    Vec v{};
    double norm = 0;
    for (int i = 0; i < c.dim; ++i) {
      v[i] = number_at(d[i], base + "/direction/" + std::to_string(i));
      norm += v[i] * v[i];
    }
    if (!(norm > 0)) throw ConfigError(base + "/direction", "zero vector");
    c.generator.direction = v;
  }
}

void parse_shading(const json& s, ExperimentConfig& c) {
  only_keys(s, "/shading", {"kind", "params"});
  if (!s.contains("kind")) throw ConfigError("/shading/kind", "missing");
  c.shading.kind = string_at(s["kind"], "/shading/kind");
  static const std::set<std::string> kinds = {"full", "random", "two_ends", "one_end"};
  if (!kinds.count(c.shading.kind)) throw ConfigError("/shading/kind", "unknown shading '" + c.shading.kind + "'");
  if (!s.contains("params")) return;
  const json& p = s["params"];
  only_keys(p, "/shading/params", {"lambda", "eps1"});
  if (p.contains("lambda")) {
    const Rational l = rational_at(p["lambda"], "/shading/params/lambda");
    if (l.sign() <= 0 || l > Rational(1)) throw ConfigError("/shading/params/lambda", "must lie in (0, 1]");
    c.shading.lambda = l.to_double();
  }
  if (p.contains("eps1")) {
    const Rational e = rational_at(p["eps1"], "/shading/params/eps1");
    if (e.sign() < 0 || e > Rational(1)) throw ConfigError("/shading/params/eps1", "must lie in [0, 1]");
    c.shading.eps1 = e.to_double();
  }
}

CheckRequest parse_check(const json& v, const std::string& path) {
  static const std::set<std::string> names = {"two_ends", "plany", "robust_transversality", "m_parallel",
                                              "exceptional_set"};
  CheckRequest r;
  const json* params = nullptr;
  if (v.is_string()) {
    r.name = v.get<std::string>();
  } else {
    only_keys(v, path, {"name", "params"});
    if (!v.contains("name")) throw ConfigError(path + "/name", "missing");
    r.name = string_at(v["name"], path + "/name");
    if (v.contains("params")) params = &v["params"];
  }
  if (!names.count(r.name)) throw ConfigError(path, "unknown check '" + r.name + "'");
  if (params) {
    const std::string base = path + "/params";
    only_keys(*params, base, {"eps1", "angle_cells", "m", "max_cells"});
    if (params->contains("eps1")) r.eps1 = number_at((*params)["eps1"], base + "/eps1");
    if (params->contains("angle_cells")) r.angle_cells = number_at((*params)["angle_cells"], base + "/angle_cells");
    if (params->contains("m")) r.m = number_at((*params)["m"], base + "/m");
    if (params->contains("max_cells")) {
      const auto n = integer_at((*params)["max_cells"], base + "/max_cells");
      if (n < 1) throw ConfigError(base + "/max_cells", "must be positive");
      r.max_cells = static_cast<std::uint64_t>(n);
    }
  }
  return r;
}

VolumeBoundSpec parse_bound(const json& v, const std::string& path) {
  only_keys(v, path, {"label", "te", "exponents", "eps", "log_c"});
  VolumeBoundSpec b;
  if (v.contains("label")) b.label = string_at(v["label"], path + "/label");
  const bool te = v.contains("te"), ex = v.contains("exponents");
  if (te == ex) throw ConfigError(path, "give exactly one of 'te' or 'exponents'");
  if (te) {
    const json& t = v["te"];
    if (!t.is_array() || t.size() != 3) throw ConfigError(path + "/te", "expected [d, a, b]");
    b.rhs = te_volume_exponents(rational_at(t[0], path + "/te/0"), rational_at(t[1], path + "/te/1"),
                                rational_at(t[2], path + "/te/2"));
    if (b.label.empty()) {
      b.label = "TE(" + rational_at(t[0], "").str() + "," + rational_at(t[1], "").str() + "," +
                rational_at(t[2], "").str() + ")";
    }
  } else {
    const json& e = v["exponents"];
    if (!e.is_object()) throw ConfigError(path + "/exponents", "expected an object");
    static const std::set<std::string> symbols = {"lambda", "delta", "mass", "mu", "m"};
    for (const auto& [k, val] : e.items()) {
      if (!symbols.count(k)) throw ConfigError(path + "/exponents/" + k, "unknown symbol");
      b.rhs.set(k, rational_at(val, path + "/exponents/" + k));
    }
    if (b.label.empty()) b.label = "volume >= " + (b.rhs.empty() ? std::string("1") : b.rhs.str());
  }
  if (v.contains("eps")) b.eps = number_at(v["eps"], path + "/eps");
  if (v.contains("log_c")) b.log_c = number_at(v["log_c"], path + "/log_c");
  return b;
}

}  // namespace

ExponentVector te_volume_exponents(const Rational& d, const Rational& a, const Rational& b) {
  ExponentVector e;
  e.set("lambda", a);
  e.set("delta", Rational(4) - d);
  e.set("mass", b);
  return e;
}

ExperimentConfig parse_experiment_config(const json& doc) {
  only_keys(doc, "", {"dim", "N", "N_list", "seed", "generator", "shading", "checks", "bounds", "net", "allow_large"});
  ExperimentConfig c;
  if (doc.contains("dim")) {
    const auto d = integer_at(doc["dim"], "/dim");
    if (d != 3 && d != 4) throw ConfigError("/dim", "must be 3 or 4");
    c.dim = static_cast<int>(d);
  }
  if (doc.contains("allow_large")) {
    if (!doc["allow_large"].is_boolean()) throw ConfigError("/allow_large", "expected a boolean");
    c.allow_large = doc["allow_large"].get<bool>();
  }
  const bool single = doc.contains("N"), many = doc.contains("N_list");
  if (single == many) throw ConfigError("/N", "give exactly one of 'N' or 'N_list'");
  auto check_n = [&](const json& v, const std::string& path) {
    const auto n = integer_at(v, path);
    try {
      GridSpec{c.dim, static_cast<int>(n)}.validate(c.allow_large);
    } catch (const SimError& e) {
      throw ConfigError(path, e.what());
    }
    return static_cast<int>(n);
  };
  if (single) {
    c.N_list.push_back(check_n(doc["N"], "/N"));
  } else {
    const json& l = doc["N_list"];
    if (!l.is_array() || l.empty()) throw ConfigError("/N_list", "expected a nonempty array");
    for (std::size_t i = 0; i < l.size(); ++i) c.N_list.push_back(check_n(l[i], "/N_list/" + std::to_string(i)));
  }
  if (doc.contains("seed")) {
    const auto s = integer_at(doc["seed"], "/seed");
    if (s < 0) throw ConfigError("/seed", "must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (!doc.contains("generator")) throw ConfigError("/generator", "missing");
  parse_generator(doc["generator"], c);
  if (doc.contains("shading")) parse_shading(doc["shading"], c);
  if (doc.contains("checks")) {
    const json& l = doc["checks"];
    if (!l.is_array()) throw ConfigError("/checks", "expected an array");
    for (std::size_t i = 0; i < l.size(); ++i) c.checks.push_back(parse_check(l[i], "/checks/" + std::to_string(i)));
  }
  if (doc.contains("bounds")) {
    const json& l = doc["bounds"];
    if (!l.is_array()) throw ConfigError("/bounds", "expected an array");
    if (c.dim != 4 && !l.empty()) throw ConfigError("/bounds", "volume bounds apply to dim 4 only");
    for (std::size_t i = 0; i < l.size(); ++i) c.bounds.push_back(parse_bound(l[i], "/bounds/" + std::to_string(i)));
  }
  if (doc.contains("net")) {
    only_keys(doc["net"], "/net", {"budget"});
    if (doc["net"].contains("budget")) {
      c.net.budget = number_at(doc["net"]["budget"], "/net/budget");
      if (!(c.net.budget > 0 && c.net.budget <= 1024)) throw ConfigError("/net/budget", "must lie in (0, 1024]");
    }
  }
  return c;
}

ScaleResult run_scale(const ExperimentConfig& config, int N) {
  GridSpec{config.dim, N}.validate(config.allow_large);
  if (config.generator.name == "single") {
    DirectionNet none;
    none.dim = config.dim;
    none.N = N;
    none.delta = 1.0 / N;
    none.seed = config.seed;
    return run_scale(config, N, none);
  }
  return run_scale(config, N, build_direction_net(config.dim, N, config.seed, config.net));
}

ScaleResult run_scale(const ExperimentConfig& config, int N, const DirectionNet& net) {
  ScaleResult r;
  r.spec = GridSpec{config.dim, N};
  r.spec.validate(config.allow_large);
  r.net_size = net.points.size();
  r.net_constant = net.density_constant();
  ShadedFamily family = make_family(r.spec, net, config.generator, config.seed);
  make_shading(family, config.shading);
  r.capped_tubes = family.capped_tubes;
  const auto mult = multiplicity(family);
  r.stats = compute_stats(family, mult);
  r.parallel = check_m_parallel(family);
  for (const auto& req : config.checks) {
    if (req.name == "two_ends") {
      r.checks["two_ends"] = to_json(check_two_ends(family, req.eps1));
    } else if (req.name == "plany") {
      r.checks["plany"] = to_json(check_plany(family, mult, req.angle_cells, req.max_cells ? req.max_cells : 20000));
    } else if (req.name == "robust_transversality") {
      r.checks["robust_transversality"] =
          to_json(check_robust_transversality(family, mult, r.stats, req.eps1, req.max_cells ? req.max_cells : 2000));
    } else if (req.name == "m_parallel") {
      r.checks["m_parallel"] = to_json(r.parallel);
    } else if (req.name == "exceptional_set") {
      if (config.dim != 4) throw ConfigError("/checks", "exceptional_set applies to dim 4 only");
      r.checks["exceptional_set"] = to_json(check_exceptional_set(family, mult, r.stats, req.eps1, req.m));
    }
  }
  const std::map<std::string, double> extra = {{"m", static_cast<double>(std::max(1, family.max_parallel))}};
  for (const auto& b : config.bounds) {
    r.margins.push_back(verify_volume_bound(r.stats, b.rhs, extra, b.eps, b.log_c, b.label));
  }
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult res;
  res.config = config;
  for (int N : config.N_list) res.scales.push_back(run_scale(config, N));
  if (res.scales.size() >= 3) {
    std::vector<ScalingRow> rows;
    for (const auto& s : res.scales) {
      ScalingRow row;
      row.N = s.spec.N;
      row.delta = s.spec.delta();
      row.volume = s.stats.volume.to_double();
      rows.push_back(row);
    }
    res.fitted = true;
    res.fit = fit_scaling(rows, config.dim);
  }
  return res;
}

json to_json(const IncidenceStats& s) {
  json hist = json::array();
  for (const auto& [m, c] : s.histogram) hist.push_back({m, c});
  return {{"dim", s.dim},
          {"N", s.N},
          {"tubes", s.tube_count},
          {"shaded_cells", s.shaded_cells},
          {"tube_incidences", s.tube_incidences},
          {"cell_incidences", s.cell_incidences},
          {"double_count_holds", s.double_count_holds()},
          {"max_multiplicity", s.max_multiplicity},
          {"volume", s.volume},
          {"lambda", s.lambda},
          {"mu", s.mu},
          {"mass", s.mass},
          {"volume_decimal", s.volume.to_double()},
          {"lambda_decimal", s.lambda.to_double()},
          {"mu_decimal", s.mu.to_double()},
          {"mass_decimal", s.mass.to_double()},
          {"tube_cells", {{"min", s.min_tube_cells}, {"max", s.max_tube_cells}, {"mean", s.mean_tube_cells}}},
          {"histogram", hist}};
}

json to_json(const TwoEndsReport& r) {
  return {{"eps1", r.eps1},
          {"window_cells", r.window_cells},
          {"max_ratio", r.max_ratio},
          {"mean_ratio", r.mean_ratio},
          {"constant", r.constant},
          {"threshold", r.threshold},
          {"within_threshold", r.within_threshold},
          {"concentrated", r.concentrated},
          {"holds", r.holds()}};
}

json to_json(const PlanyReport& r) {
  return {{"angle_threshold_cells", r.angle_threshold_cells},
          {"cells_examined", r.cells_examined},
          {"cells_within", r.cells_within},
          {"fraction_within", r.fraction_within},
          {"max_angle", r.max_angle},
          {"mean_angle", r.mean_angle}};
}

json to_json(const TransversalityReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"radius", l.radius},
                      {"max_cap_count", l.max_cap_count},
                      {"max_ratio", l.max_ratio},
                      {"mean_ratio", l.mean_ratio}});
  }
  return {{"eps1", r.eps1}, {"mu", r.mu}, {"cells_examined", r.cells_examined}, {"levels", levels}};
}

json to_json(const ParallelReport& r) {
  return {{"max_per_direction", r.max_per_direction}, {"directions_used", r.directions_used}};
}

json to_json(const ExceptionalSetReport& r) {
  return {{"eps1", r.eps1},
          {"m", r.m},
          {"threshold", r.threshold},
          {"exceptional_cells", r.exceptional_cells},
          {"fraction", r.fraction},
          {"allowed", r.allowed},
          {"within", r.within}};
}

json to_json(const MarginReport& r) {
  return {{"label", r.label},
          {"log_volume", r.log_volume},
          {"log_bound", r.log_bound},
          {"margin", r.margin},
          {"budget", r.budget},
          {"within_budget", r.within_budget}};
}

json to_json(const ScalingFit& f) {
  return {{"degenerate", f.degenerate},
          {"slope", f.slope},
          {"intercept", f.intercept},
          {"d_hat", f.d_hat},
          {"r_squared", f.r_squared}};
}

json to_json(const ExperimentResult& r) {
  const auto& c = r.config;
  json checks = json::array();
  for (const auto& q : c.checks) checks.push_back(q.name);
  json config = {{"dim", c.dim},
                 {"N_list", c.N_list},
                 {"seed", c.seed},
                 {"generator",
                  {{"name", c.generator.name},
                   {"m", c.generator.m},
                   {"rho_cells", c.generator.rho_cells},
                   {"count", c.generator.all_directions ? json("all")
                                                        : (c.generator.count ? json(*c.generator.count) : json(nullptr))}}},
                 {"shading", {{"kind", c.shading.kind}, {"lambda", c.shading.lambda}, {"eps1", c.shading.eps1}}},
                 {"checks", checks},
                 {"net_budget", c.net.budget}};
  json scales = json::array();
  for (const auto& s : r.scales) {
    json margins = json::array();
    for (const auto& m : s.margins) margins.push_back(to_json(m));
    scales.push_back({{"N", s.spec.N},
                      {"delta", s.spec.delta()},
                      {"net_size", s.net_size},
                      {"net_constant", s.net_constant},
                      {"stats", to_json(s.stats)},
                      {"m_parallel", to_json(s.parallel)},
                      {"one_end_capped_tubes", s.capped_tubes},
                      {"checks", s.checks},
                      {"margins", margins}});
  }
  json out = {{"config", config}, {"scales", scales}};
  if (r.fitted) out["fit"] = to_json(r.fit);
  return out;
}

std::string to_csv(const ExperimentResult& r) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "N,delta,tubes,lambda,mu,volume,mass";
  for (const auto& b : r.config.bounds) os << ",margin:" << b.label;
  os << '\n';
  for (const auto& s : r.scales) {
    os << s.spec.N << ',' << s.spec.delta() << ',' << s.stats.tube_count << ',' << s.stats.lambda.to_double() << ','
       << s.stats.mu.to_double() << ',' << s.stats.volume.to_double() << ',' << s.stats.mass.to_double();
    for (const auto& m : s.margins) os << ',' << m.margin;
    os << '\n';
  }
  return os.str();
}

}  // namespace tubenum
