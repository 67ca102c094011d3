#include "tubenum/derive/derivation.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tubenum/calculus/error.hpp"
#include "tubenum/calculus/json.hpp"

namespace tubenum {

Anchor Anchor::plumbing(std::string note) { return {kPlumbingTag, std::move(note)}; }

DerivationMismatch::DerivationMismatch(std::string step, std::string symbol, Rational expected, Rational actual)
    : std::runtime_error("step '" + step + "': exponent of " + symbol + " is " + actual.str() + ", expected " +
                         expected.str()),
      step_(std::move(step)),
      symbol_(std::move(symbol)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

const Step& Derivation::step(const std::string& id) const {
  auto it = std::find_if(steps.begin(), steps.end(), [&](const Step& s) { return s.id == id; });
  if (it == steps.end()) throw std::out_of_range("no step '" + id + "' in derivation " + name);
  return *it;
}

std::vector<Anchor> Derivation::anchors() const {
  std::vector<Anchor> out;
  for (const auto& s : steps) out.push_back(s.anchor);
  return out;
}

DerivationBuilder::DerivationBuilder(std::string name, const std::map<std::string, Bound>& axioms) : env_(axioms) {
  d_.name = std::move(name);
}

const Bound& DerivationBuilder::get(const std::string& id) const {
  auto it = env_.find(id);
  if (it == env_.end()) throw CalculusError(ErrorKind::ContractViolation, "unknown bound id '" + id + "'");
  return it->second;
}

const Bound& DerivationBuilder::record(Step step) {
  if (env_.count(step.id)) {
    throw CalculusError(ErrorKind::ContractViolation, "bound id '" + step.id + "' defined twice");
  }
  const std::string id = step.id;
  env_[id] = step.output;
  d_.steps.push_back(std::move(step));
  return env_.at(id);
}

const Bound& DerivationBuilder::axiom(const std::string& id, const Bound& b, Anchor anchor) {
  Bound out = b;
  if (out.provenance.empty() || out.provenance.back() != id) out.provenance.push_back(id);
  return record({id, "axiom", {}, {{"bound", out}}, out, std::move(anchor)});
}

const Bound& DerivationBuilder::interpolate(const std::string& id, const std::string& b1, const std::string& b2,
                                            const Rational& t, Anchor anchor) {
  Bound out = tubenum::interpolate(get(b1), get(b2), t, id);
  return record({id, "interpolate", {b1, b2}, {{"t", t}}, std::move(out), std::move(anchor)});
}

Rational DerivationBuilder::solve_weight(const std::string& b1, const std::string& b2, const std::string& sym,
                                         const Rational& target) {
  return tubenum::solve_weight(get(b1), get(b2), sym, target);
}

const Bound& DerivationBuilder::eliminate(const std::string& id, const std::string& b1, const std::string& b2,
                                          const std::string& sym, Anchor anchor) {
  auto [t, out] = tubenum::eliminate(get(b1), get(b2), sym, id);
  return record({id, "eliminate", {b1, b2}, {{"sym", sym}, {"t", t}}, std::move(out), std::move(anchor)});
}

const Bound& DerivationBuilder::compose(const std::string& id, const std::string& outer, const std::string& inner,
                                        Anchor anchor) {
  Bound out = tubenum::compose(get(outer), get(inner), id);
  return record({id, "compose", {outer, inner}, nlohmann::json::object(), std::move(out), std::move(anchor)});
}

const Bound& DerivationBuilder::substitute(const std::string& id, const std::string& input, const std::string& sym,
                                           const ExponentVector& replacement, Anchor anchor) {
  Bound out = tubenum::substitute_rescale(get(input), sym, replacement, id);
  return record({id, "substitute_rescale", {input}, {{"sym", sym}, {"replacement", replacement}}, std::move(out),
                 std::move(anchor)});
}

const Bound& DerivationBuilder::drop(const std::string& id, const std::string& input, const std::string& sym,
                                     Anchor anchor) {
  Bound out = tubenum::drop_bounded(get(input), sym, id);
  return record({id, "drop_bounded", {input}, {{"sym", sym}}, std::move(out), std::move(anchor)});
}

const Bound& DerivationBuilder::double_count(const std::string& id, const std::string& input,
                                             const DoubleCountFrame& frame, Anchor anchor) {
  Bound out = tubenum::double_count(get(input), frame, id);
  nlohmann::json params = {
      {"frame", {{"volume", frame.volume}, {"mu", frame.mu}, {"density", frame.density}, {"mass", frame.mass}}}};
  return record({id, "double_count", {input}, std::move(params), std::move(out), std::move(anchor)});
}

const Bound& DerivationBuilder::weaken(const std::string& id, const std::string& input, const ExponentVector& factor,
                                       Loss loss, Anchor anchor) {
  Bound out = tubenum::weaken(get(input), factor, loss, id);
  return record({id, "weaken", {input}, {{"factor", factor}, {"loss", to_string(loss)}}, std::move(out),
                 std::move(anchor)});
}

const Bound& DerivationBuilder::rename(const std::string& id, const std::string& input, const std::string& quantity,
                                       Anchor anchor) {
  Bound out = tubenum::rename_quantity(get(input), quantity, id);
  return record({id, "rename_quantity", {input}, {{"quantity", quantity}}, std::move(out), std::move(anchor)});
}

void DerivationBuilder::checkpoint(const std::string& id, const ExponentVector& expected) {
  const Bound& actual = get(id);
  std::map<std::string, bool> symbols;
  for (const auto& [s, e] : expected.entries()) symbols[s] = true;
  for (const auto& [s, e] : actual.rhs.entries()) symbols[s] = true;
  for (const auto& [s, unused] : symbols) {
    if (expected.get(s) != actual.rhs.get(s)) throw DerivationMismatch(id, s, expected.get(s), actual.rhs.get(s));
  }
  d_.checkpoints.push_back({id, expected});
}

void DerivationBuilder::result(const std::string& key, nlohmann::json value) { d_.results[key] = std::move(value); }

namespace {

Loss parse_loss(const std::string& s) {
  if (s == "Sharp") return Loss::Sharp;
  if (s == "PolyLog") return Loss::PolyLog;
  if (s == "EpsPower") return Loss::EpsPower;
  throw CalculusError(ErrorKind::Parse, "unknown loss '" + s + "'");
}

Bound execute(const Step& s, const std::map<std::string, Bound>& env) {
  auto in = [&](std::size_t i) -> const Bound& {
    auto it = env.find(s.inputs.at(i));
    if (it == env.end()) throw CalculusError(ErrorKind::ContractViolation, "unknown input '" + s.inputs.at(i) + "'");
    return it->second;
  };
  const auto& p = s.params;
  if (s.op == "axiom") return p.at("bound").get<Bound>();
  if (s.op == "interpolate") return interpolate(in(0), in(1), p.at("t").get<Rational>(), s.id);
  if (s.op == "eliminate") {
    auto [t, out] = eliminate(in(0), in(1), p.at("sym").get<std::string>(), s.id);
    if (t != p.at("t").get<Rational>()) {
      throw CalculusError(ErrorKind::ContractViolation, "weight changed to " + t.str());
    }
    return out;
  }
  if (s.op == "compose") return compose(in(0), in(1), s.id);
  if (s.op == "substitute_rescale") {
    return substitute_rescale(in(0), p.at("sym").get<std::string>(), p.at("replacement").get<ExponentVector>(), s.id);
  }
  if (s.op == "drop_bounded") return drop_bounded(in(0), p.at("sym").get<std::string>(), s.id);
  if (s.op == "double_count") {
    const auto& f = p.at("frame");
    DoubleCountFrame frame{f.at("volume").get<std::string>(), f.at("mu").get<std::string>(),
                           f.at("density").get<std::string>(), f.at("mass").get<std::string>()};
    return double_count(in(0), frame, s.id);
  }
  if (s.op == "weaken") {
    return weaken(in(0), p.at("factor").get<ExponentVector>(), parse_loss(p.at("loss").get<std::string>()), s.id);
  }
  if (s.op == "rename_quantity") return rename_quantity(in(0), p.at("quantity").get<std::string>(), s.id);
  throw CalculusError(ErrorKind::ContractViolation, "unknown op '" + s.op + "'");
}

}  // namespace

ReplayReport replay(const Derivation& d, const std::map<std::string, Bound>& axioms) {
  ReplayReport report;
  std::map<std::string, Bound> env = axioms;
  for (const auto& s : d.steps) {
    Bound out;
    try {
      out = execute(s, env);
    } catch (const std::exception& e) {
      report.ok = false;
      report.mismatch = "step '" + s.id + "': " + e.what();
      return report;
    }
    if (!(out == s.output)) {
      report.ok = false;
      report.mismatch = "step '" + s.id + "': replay gives " + to_text(out) + ", recorded " + to_text(s.output);
      return report;
    }
    env[s.id] = std::move(out);
    ++report.steps_checked;
  }
  for (const auto& c : d.checkpoints) {
    auto it = env.find(c.step);
    if (it == env.end() || !(it->second.rhs == c.expected)) {
      report.ok = false;
      report.mismatch = "checkpoint '" + c.step + "' not reproduced";
      return report;
    }
  }
  return report;
}

void to_json(nlohmann::json& j, const Anchor& a) { j = {{"location", a.location}, {"note", a.note}}; }

void from_json(const nlohmann::json& j, Anchor& a) {
  a.location = j.at("location").get<std::string>();
  a.note = j.at("note").get<std::string>();
}

void to_json(nlohmann::json& j, const Step& s) {
  j = {{"id", s.id},         {"op", s.op},         {"inputs", s.inputs},
       {"params", s.params}, {"output", s.output}, {"anchor", s.anchor}};
}

void from_json(const nlohmann::json& j, Step& s) {
  s.id = j.at("id").get<std::string>();
  s.op = j.at("op").get<std::string>();
  s.inputs = j.at("inputs").get<std::vector<std::string>>();
  s.params = j.at("params");
  s.output = j.at("output").get<Bound>();
  s.anchor = j.at("anchor").get<Anchor>();
}

void to_json(nlohmann::json& j, const Derivation& d) {
  nlohmann::json checkpoints = nlohmann::json::array();
  for (const auto& c : d.checkpoints) checkpoints.push_back({{"step", c.step}, {"expected", c.expected}});
  j = {{"name", d.name}, {"steps", d.steps}, {"checkpoints", checkpoints}, {"results", d.results}};
}

void from_json(const nlohmann::json& j, Derivation& d) {
  d.name = j.at("name").get<std::string>();
  d.steps = j.at("steps").get<std::vector<Step>>();
  d.checkpoints.clear();
  for (const auto& c : j.at("checkpoints")) {
    d.checkpoints.push_back({c.at("step").get<std::string>(), c.at("expected").get<ExponentVector>()});
  }
  d.results = j.at("results");
}

std::string exact_and_decimal(const Rational& r) {
  if (r.is_integer()) return r.str();
  const std::string int_part = r.abs().floor().get_str();
  const int after = int_part == "0" ? 10 : std::max(0, 10 - static_cast<int>(int_part.size()));
  return r.str() + " (" + r.decimal(after) + ")";
}

std::string step_table(const Derivation& d) {
  std::ostringstream out;
  out << d.name << "\n";
  out << std::left << std::setw(24) << "step" << std::setw(20) << "op" << std::setw(14) << "weight"
      << "result\n";
  for (const auto& s : d.steps) {
    std::string weight;
    if (s.params.contains("t")) weight = s.params.at("t").get<std::string>();
    out << std::left << std::setw(24) << s.id << std::setw(20) << s.op << std::setw(14) << weight
        << to_text(s.output) << "\n";
    out << std::string(24, ' ') << "[" << s.anchor.location;
    if (!s.anchor.note.empty()) out << ": " << s.anchor.note;
    out << "]\n";
  }
  return out.str();
}

}  // namespace tubenum
