#include "tubenum/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tubenum/algebra/quadratic.hpp"
#include "tubenum/calculus/error.hpp"
#include "tubenum/calculus/json.hpp"
#include "tubenum/cli/verify.hpp"
#include "tubenum/derive/incidence.hpp"
#include "tubenum/derive/restriction.hpp"
#include "tubenum/derive/self_improve.hpp"
#include "tubenum/sim/experiment.hpp"

namespace tubenum {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad value for ") + what + ": '" + text + "'");
  }
}

std::string q10(const QuadraticNumber& x) { return x.decimal(10); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

/// Writes `text` to `path`; returns false and reports on failure.
bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

/// JSON goes to --out when given, otherwise to stdout.
int emit_json(const json& doc, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const std::string text = doc.dump(2) + "\n";
  if (!flags.out.empty()) return write_file(flags.out, text, err) ? kExitOk : kExitFailure;
  out << text;
  return kExitOk;
}

std::string te_line(const TEStatement& t) { return t.str(); }

json te_json(const TEStatement& t) {
  return {{"text", t.str()},
          {"d", t.d.str()},
          {"a", t.a.str()},
          {"b", t.b.str()},
          {"slack", t.slack},
          {"slack_in_a", t.slack_in_a}};
}

int derive_incidence(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const IncidenceResult r = derive_lemma_incidence();
  const IncidenceLp lp = incidence_lp_certificate(r);
  if (flags.json) {
    json doc = {{"derivation", r.trace},
                {"multiplicity", r.multiplicity},
                {"volume", r.volume},
                {"volume_m_parallel", r.volume_m_parallel},
                {"combination_weight", r.combination_weight},
                {"rho_weight", r.rho_weight},
                {"lp_optimum_delta_exponent", lp.best.solution.value},
                {"replayed_is_optimal", lp.replayed_is_optimal}};
    return emit_json(doc, flags, out, err);
  }
  out << step_table(r.trace) << "\n";
  out << "multiplicity: " << to_text(r.multiplicity) << "\n";
  out << "volume:       " << to_text(r.volume) << "\n";
  out << "m-parallel:   " << to_text(r.volume_m_parallel) << "\n";
  out << "route weight " << r.combination_weight.str() << ", rho elimination weight " << r.rho_weight.str() << "\n";
  out << "best delta exponent over route combinations: " << exact_and_decimal(lp.best.solution.value)
      << (lp.replayed_is_optimal ? " (attained by the chain above)" : " (the chain above is not optimal)") << "\n";
  return kExitOk;
}

int derive_restriction(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const RestrictionResult r = derive_restriction_exponent();
  if (flags.json) {
    json doc = {{"derivation", r.trace},
                {"theta", r.theta},
                {"p", r.p},
                {"theta_low", r.theta_low},
                {"theta_high", r.theta_high},
                {"binding_symbol", r.binding_symbol},
                {"endpoint_high", r.endpoint_high},
                {"endpoint_low", r.endpoint_low}};
    return emit_json(doc, flags, out, err);
  }
  out << step_table(r.trace) << "\n";
  out << "feasible weights: [" << r.theta_low.str() << ", " << r.theta_high.str() << "], binding symbol "
      << r.binding_symbol << "\n";
  out << "theta = " << r.theta.str() << "\n";
  out << "p = " << r.p.str() << " = 2 + " << (r.p - Rational(2)).str() << " (" << r.p.decimal(10) << ")\n";
  return kExitOk;
}

json flags_json(const SelfImproveFlags& f) {
  return {{"alpha_in_window", f.alpha_in_window},
          {"beta_in_window", f.beta_in_window},
          {"condition_i", f.condition_i},
          {"condition_ii", f.condition_ii},
          {"mass_exponent_nonnegative", f.mass_exponent_nonnegative},
          {"improves", f.improves},
          {"valid", f.valid()}};
}

int derive_self_improve_cmd(const DeriveArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const Rational alpha = rational_arg(args.alpha, "--alpha");
  const Rational beta = rational_arg(args.beta, "--beta");
  const SelfImproveResult r = derive_self_improve(alpha, beta);
  if (flags.json) {
    json doc = {{"derivation", r.trace},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"alpha_prime", r.alpha_prime},
                {"alpha_double_prime", r.alpha_double_prime},
                {"lambda_prime", r.lambda_prime},
                {"lambda_double_prime", r.lambda_double_prime},
                {"mass_prime", r.mass_prime},
                {"mass_double_prime", r.mass_double_prime},
                {"planar_weight", r.planar_weight},
                {"rho_weight", r.rho_weight},
                {"two_ends_weight", r.two_ends_weight},
                {"alpha_prime_bound", r.alpha_prime_bound},
                {"alpha_double_prime_bound", r.alpha_double_prime_bound},
                {"flags", flags_json(r.flags)}};
    if (r.te_prime) doc["te_prime"] = te_json(*r.te_prime);
    if (r.te_double_prime) doc["te_double_prime"] = te_json(*r.te_double_prime);
    const int code = emit_json(doc, flags, out, err);
    return code != kExitOk ? code : (r.flags.valid() ? kExitOk : kExitFailure);
  }
  out << step_table(r.trace) << "\n";
  out << "alpha' = " << r.alpha_prime.str() << ", alpha'' = " << r.alpha_double_prime.str() << "\n";
  out << "weights: planar " << r.planar_weight.str() << ", rho " << r.rho_weight.str() << ", two-ends "
      << r.two_ends_weight.str() << "\n";
  out << "hypotheses: alpha window " << yes_no(r.flags.alpha_in_window) << ", beta window "
      << yes_no(r.flags.beta_in_window) << ", (i) " << yes_no(r.flags.condition_i) << ", (ii) "
      << yes_no(r.flags.condition_ii) << ", mass exponent >= 0 " << yes_no(r.flags.mass_exponent_nonnegative)
      << ", improves " << yes_no(r.flags.improves) << "\n";
  if (r.te_prime) out << "gives " << te_line(*r.te_prime) << "\n";
  if (r.te_double_prime) out << "gives " << te_line(*r.te_double_prime) << "\n";
  if (!r.flags.valid()) {
    err << "hypotheses of the self-improvement step fail at alpha = " << alpha.str() << ", beta = " << beta.str()
        << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int derive_iterate(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const Rational eps = rational_arg(flags.eps.empty() ? "1e-9" : flags.eps, "--eps");
  if (eps.sign() <= 0) throw UsageError("--eps must be positive");
  const KakeyaIteration it = iterate_self_improvement(eps);
  const QuadraticNumber& star = alpha_star();
  const bool ok = it.strictly_decreasing && it.above_fixed_point && it.trajectory_window_ok &&
                  it.interval_window.holds() && QuadraticNumber(it.alpha_K) - star < QuadraticNumber(eps);
  if (flags.json) {
    json traj = json::array();
    for (const auto& a : it.trajectory) traj.push_back(a.decimal(20));
    json tes = json::array();
    for (const auto& t : it.te_statements) tes.push_back(te_json(t));
    json doc = {{"beta", it.beta},
                {"eps", it.eps},
                {"K", it.K},
                {"alpha_K", it.alpha_K},
                {"alpha_K_decimal", it.alpha_K.decimal(20)},
                {"alpha_star", star.str()},
                {"alpha_star_decimal", star.decimal(20)},
                {"d0", kakeya_d0().fraction_str()},
                {"d0_decimal", kakeya_d0().decimal(20)},
                {"trajectory_decimal", traj},
                {"strictly_decreasing", it.strictly_decreasing},
                {"above_fixed_point", it.above_fixed_point},
                {"rounded_steps", it.rounded_steps},
                {"trajectory_window_ok", it.trajectory_window_ok},
                {"interval_window_ok", it.interval_window.holds()},
                {"te_statements", tes},
                {"seed_derivation", it.seed}};
    const int code = emit_json(doc, flags, out, err);
    return code != kExitOk ? code : (ok ? kExitOk : kExitFailure);
  }
  out << step_table(it.seed) << "\n";
  out << "beta = " << it.beta.str() << ", eps = " << it.eps.str() << "\n";
  out << "K = " << it.K << " iterates";
  if (it.rounded_steps > 0) out << " (" << it.rounded_steps << " rounded up to a 2^-256 grid)";
  out << "\n";
  for (std::size_t i = 0; i < it.trajectory.size(); ++i) {
    out << "  alpha_" << i + 1 << " = ";
    if (it.trajectory[i].denominator_bits() <= 40) out << it.trajectory[i].str() << " = ";
    out << it.trajectory[i].decimal(15) << "\n";
  }
  out << "alpha_K = " << it.alpha_K.decimal(15) << "\n";
  out << "alpha* = " << star.fraction_str() << " ≈ " << q10(star) << "\n";
  out << "alpha_K - alpha* ≈ " << (QuadraticNumber(it.alpha_K) - star).decimal(15) << "\n";
  out << "strictly decreasing: " << yes_no(it.strictly_decreasing) << ", window conditions along the trajectory: "
      << yes_no(it.trajectory_window_ok) << ", on [alpha*, 1]: " << yes_no(it.interval_window.holds()) << "\n";
  for (const auto& t : it.te_statements) out << "gives " << te_line(t) << "\n";
  out << "d0 = " << kakeya_d0().fraction_str() << " ≈ " << q10(kakeya_d0()) << "\n";
  if (!ok) {
    err << "iteration did not meet its guarantees\n";
    return kExitFailure;
  }
  return kExitOk;
}

int derive_beta_window(const DeriveArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const QuadraticNumber low = args.alpha_low.empty() ? alpha_star() : QuadraticNumber(rational_arg(args.alpha_low, "--alpha-low"));
  const QuadraticNumber high(rational_arg(args.alpha_high, "--alpha-high"));
  const Rational beta = rational_arg(args.beta, "--beta");
  const BetaWindowReport w = check_beta_window(low, high, beta);
  if (flags.json) {
    json doc = {{"alpha_low", w.alpha_low.str()},
                {"alpha_high", w.alpha_high.str()},
                {"beta", w.beta},
                {"condition_i", w.condition_i},
                {"condition_ii", w.condition_ii},
                {"min_condition_i", w.min_condition_i.str()},
                {"min_condition_ii", w.min_condition_ii.str()},
                {"witness_i", w.witness_i.str()},
                {"witness_ii", w.witness_ii.str()},
                {"beta_max", w.beta_max.str()},
                {"beta_min", w.beta_min.str()},
                {"holds", w.holds()}};
    const int code = emit_json(doc, flags, out, err);
    return code != kExitOk ? code : (w.holds() ? kExitOk : kExitFailure);
  }
  out << "alpha in [" << w.alpha_low.str() << ", " << w.alpha_high.str() << "], beta = " << beta.str() << "\n";
  out << "(i)  96 - 31a - 24b >= 0: " << (w.condition_i ? "holds" : "fails") << ", minimum " << w.min_condition_i.str()
      << " at a = " << w.witness_i.str() << "\n";
  out << "(ii) 196a^2 - (417 + 12b)a + 72b + 90 >= 0: " << (w.condition_ii ? "holds" : "fails") << ", minimum "
      << w.min_condition_ii.str() << " at a = " << w.witness_ii.str() << "\n";
  out << "beta window on this interval: " << w.beta_min.str() << " <= beta <= " << w.beta_max.str() << "\n";
  return w.holds() ? kExitOk : kExitFailure;
}

int derive_corollary(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const TrilinearReplay t = derive_trilinear_corollary();
  if (flags.json) {
    json doc = {{"derivation", t.trace}, {"converted", t.converted}, {"matches_registered", t.matches_axiom}};
    const int code = emit_json(doc, flags, out, err);
    return code != kExitOk ? code : (t.matches_axiom ? kExitOk : kExitFailure);
  }
  out << step_table(t.trace) << "\n";
  out << "converted: " << to_text(t.converted) << "\n";
  out << "agrees with the registered multiplicity form: " << yes_no(t.matches_axiom) << "\n";
  return t.matches_axiom ? kExitOk : kExitFailure;
}

}  // namespace

int cmd_derive(const DeriveArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    if (args.name == "lemma-incidence") return derive_incidence(flags, out, err);
    if (args.name == "restriction-exponent") return derive_restriction(flags, out, err);
    if (args.name == "self-improve") return derive_self_improve_cmd(args, flags, out, err);
    if (args.name == "kakeya-iterate") return derive_iterate(flags, out, err);
    if (args.name == "beta-window") return derive_beta_window(args, flags, out, err);
    if (args.name == "cor-gz") return derive_corollary(flags, out, err);
    err << "unknown derivation '" << args.name
        << "'; expected one of lemma-incidence, restriction-exponent, self-improve, kakeya-iterate, beta-window, "
           "cor-gz\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const DerivationMismatch& e) {
    err << "assertion failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const CalculusError& e) {
    err << "derivation failed: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_sim(const SimArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  json doc;
  {
    std::ifstream f(args.config_path);
    if (!f) {
      err << "cannot read config " << args.config_path << "\n";
      return kExitUsage;
    }
    try {
      doc = json::parse(f);
    } catch (const json::parse_error& e) {
      err << args.config_path << ": not valid JSON: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  ExperimentConfig config;
  try {
    config = parse_experiment_config(doc);
  } catch (const ConfigError& e) {
    err << args.config_path << ": invalid config at " << e.path() << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (flags.seed) config.seed = *flags.seed;
  if (args.scale && config.N_list.size() < 3) {
    err << args.config_path << ": invalid config at /N_list: --scale needs at least three scales\n";
    return kExitUsage;
  }

  ExperimentResult result;
  try {
    if (args.scale) {
      result = run_experiment(config);
    } else {
      result.config = config;
      for (int N : config.N_list) result.scales.push_back(run_scale(config, N));
    }
  } catch (const ConfigError& e) {
    err << args.config_path << ": invalid config at " << e.path() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const SimError& e) {
    err << "simulation failed: " << e.what() << "\n";
    return e.kind() == SimErrorKind::InvalidConfig ? kExitUsage : kExitFailure;
  }

  const json report = to_json(result);
  const std::string csv = to_csv(result);
  std::string prefix = flags.out;
  if (prefix.empty()) prefix = std::filesystem::path(args.config_path).stem().string() + "_report";
  if (!write_file(prefix + ".json", report.dump(2) + "\n", err) || !write_file(prefix + ".csv", csv, err)) {
    return kExitFailure;
  }

  if (flags.json) {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << std::setprecision(6);
  for (const auto& s : result.scales) {
    const auto& st = s.stats;
    out << "dim " << s.spec.dim << ", N = " << s.spec.N << ", generator " << config.generator.name << ", shading "
        << config.shading.kind << ", seed " << config.seed << "\n";
    out << "  tubes " << st.tube_count << " (net " << s.net_size << "), max per direction "
        << s.parallel.max_per_direction << "\n";
    out << "  volume " << st.volume.str() << " ≈ " << st.volume.to_double() << ", lambda ≈ " << st.lambda.to_double()
        << ", mu ≈ " << st.mu.to_double() << ", mass " << st.mass.str() << "\n";
    out << "  incidences " << st.tube_incidences << " by tubes, " << st.cell_incidences << " by cells"
        << (st.double_count_holds() ? "" : "  MISMATCH") << "; max multiplicity " << st.max_multiplicity << "\n";
    if (s.checks.contains("two_ends")) {
      const auto& t = s.checks["two_ends"];
      out << "  two-ends " << (t["holds"].get<bool>() ? "holds" : "FAILS") << ": max window ratio "
          << t["max_ratio"].get<double>() << " (window "
          << t["window_cells"].get<int>() << " cells, constant " << t["constant"].get<double>() << "), "
          << (t["within_threshold"].get<bool>() ? "within" : "above") << " 4 delta^(eps1/2) = "
          << t["threshold"].get<double>() << (t["concentrated"].get<bool>() ? "; concentrated in one window" : "")
          << "\n";
    }
    if (s.checks.contains("plany")) {
      const auto& p = s.checks["plany"];
      out << "  plany: " << p["fraction_within"].get<double>() << " of " << p["cells_examined"].get<std::uint64_t>()
          << " cells within " << p["angle_threshold_cells"].get<double>() << " delta, max angle "
          << p["max_angle"].get<double>() << "\n";
    }
    if (s.checks.contains("robust_transversality")) {
      for (const auto& l : s.checks["robust_transversality"]["levels"]) {
        out << "  transversality r = " << l["radius"].get<double>() << ": max cap ratio " << l["max_ratio"].get<double>()
            << "\n";
      }
    }
    if (s.checks.contains("exceptional_set")) {
      const auto& e = s.checks["exceptional_set"];
      out << "  exceptional cells: fraction " << e["fraction"].get<double>() << " (allowed " << e["allowed"].get<double>()
          << ")\n";
    }
    for (const auto& m : s.margins) {
      out << "  margin vs " << m.label << ": " << m.margin << (m.within_budget ? "" : "  below budget") << "\n";
    }
  }
  if (result.fitted) {
    if (result.fit.degenerate) {
      out << "fit: degenerate (no spread in delta)\n";
    } else {
      out << "fit: slope " << result.fit.slope << ", d_hat = " << result.fit.d_hat << ", r^2 = " << result.fit.r_squared
          << "\n";
    }
  }
  out << "wrote " << prefix << ".json and " << prefix << ".csv\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.only = args.only;
  if (flags.seed) options.seed = *flags.seed;
  if (!options.only.empty()) {
    bool known = false;
    for (const auto& t : verify_tags()) known = known || t == options.only;
    if (!known) {
      err << "unknown tag '" << options.only << "' for --only; expected exponents, sim or determinism\n";
      return kExitUsage;
    }
  }
  const auto results = run_verify(options);
  if (flags.json) {
    const int code = emit_json(verify_report(results), flags, out, err);
    if (code != kExitOk) return code;
  } else {
    out << verify_text(results);
    if (!flags.out.empty() && !write_file(flags.out, verify_report(results).dump(2) + "\n", err)) return kExitFailure;
  }
  return all_pass(results) ? kExitOk : kExitFailure;
}

int cmd_net(const NetArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    GridSpec{args.dim, args.N}.validate(true);
  } catch (const SimError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (!(args.budget > 0)) {
    err << "--budget must be positive\n";
    return kExitUsage;
  }
  NetOptions options;
  options.budget = args.budget;
  const DirectionNet net = build_direction_net(args.dim, args.N, flags.seed.value_or(0), options);
  constexpr std::size_t kBruteForceLimit = 30000;
  const bool measured = net.points.size() <= kBruteForceLimit;
  const double min_angle = measured ? min_pairwise_angle(net) : 0;
  if (flags.json) {
    json doc = {{"dim", net.dim},
                {"N", net.N},
                {"delta", net.delta},
                {"seed", net.seed},
                {"size", net.points.size()},
                {"density_constant", net.density_constant()},
                {"candidates", net.candidates_examined}};
    if (measured) {
      doc["min_angle"] = min_angle;
      doc["min_angle_over_delta"] = min_angle / net.delta;
    }
    if (args.list) {
      json pts = json::array();
      for (const auto& p : net.points) pts.push_back(std::vector<double>(p.begin(), p.begin() + net.dim));
      doc["points"] = pts;
    }
    return emit_json(doc, flags, out, err);
  }
  out << std::setprecision(6);
  out << "dim " << net.dim << ", N = " << net.N << ", seed " << net.seed << ": " << net.points.size()
      << " directions from " << net.candidates_examined << " candidates\n";
  out << "size * delta^(dim-1) = " << net.density_constant() << "\n";
  if (measured) {
    out << "smallest pairwise angle " << min_angle << " = " << min_angle / net.delta << " delta\n";
  } else {
    out << "pairwise angles not measured above " << kBruteForceLimit << " directions\n";
  }
  if (args.list) {
    out << std::setprecision(12);
    for (const auto& p : net.points) {
      for (int i = 0; i < net.dim; ++i) out << (i ? " " : "") << p[i];
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_fit(const FitArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  if (args.dim != 3 && args.dim != 4) {
    err << "--dim must be 3 or 4\n";
    return kExitUsage;
  }
  std::ifstream f(args.csv_path);
  if (!f) {
    err << "cannot read " << args.csv_path << "\n";
    return kExitUsage;
  }
  std::string line;
  if (!std::getline(f, line)) {
    err << args.csv_path << ": empty file\n";
    return kExitUsage;
  }
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  int col_delta = -1, col_volume = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "delta") col_delta = static_cast<int>(i);
    if (header[i] == "volume") col_volume = static_cast<int>(i);
  }
  if (col_delta < 0 || col_volume < 0) {
    err << args.csv_path << ": needs 'delta' and 'volume' columns\n";
    return kExitUsage;
  }
  std::vector<ScalingRow> rows;
  int line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ScalingRow row;
    try {
      row.delta = std::stod(cells.at(static_cast<std::size_t>(col_delta)));
      row.volume = std::stod(cells.at(static_cast<std::size_t>(col_volume)));
    } catch (const std::exception&) {
      err << args.csv_path << ":" << line_no << ": unreadable row\n";
      return kExitUsage;
    }
    if (!(row.delta > 0 && row.volume > 0)) {
      err << args.csv_path << ":" << line_no << ": delta and volume must be positive\n";
      return kExitUsage;
    }
    rows.push_back(row);
  }
  const ScalingFit fit = fit_scaling(rows, args.dim);
  if (flags.json) {
    json doc = to_json(fit);
    doc["rows"] = rows.size();
    const int code = emit_json(doc, flags, out, err);
    return code != kExitOk ? code : (fit.degenerate ? kExitFailure : kExitOk);
  }
  if (fit.degenerate) {
    out << "degenerate fit: " << rows.size() << " rows without spread in delta\n";
    return kExitFailure;
  }
  out << std::setprecision(6) << rows.size() << " rows, slope " << fit.slope << ", d_hat = " << fit.d_hat
      << ", r^2 = " << fit.r_squared << "\n";
  return kExitOk;
}

}  // namespace tubenum
