#include "tubenum/derive/restriction.hpp"

#include <optional>

#include "tubenum/calculus/error.hpp"
#include "tubenum/derive/incidence.hpp"
#include "tubenum/derive/registry.hpp"

namespace tubenum {

namespace {

Anchor endpoint(std::string note) { return {"restriction endpoint numerology", std::move(note)}; }

const Rational kHighExponent(10, 3);

}  // namespace

RestrictionResult derive_restriction_from(const Bound& multiplicity, const std::string& name) {
  DerivationBuilder b(name, {});
  b.axiom("mu_m", multiplicity, endpoint("multiplicity bound for m-parallel families"));
  b.substitute("mu_h", "mu_m", "lambda", {{"lambda", Rational(1)}, {"h", Rational(1)}},
               endpoint("density of the shading is lambda h"));
  b.substitute("mu_R", "mu_h", "delta", {{"R", Rational(-1, 2)}}, endpoint("tubes of radius R^-1/2"));
  b.axiom("local_rule",
          Bound{"normalized_integral",
                Relation::UpperApprox,
                {{"mu", Rational(2, 3)}, {"m", Rational(-2, 3)}, {"R", Rational(-1)}},
                Loss::EpsPower,
                {}},
          endpoint("decoupling gains (mu/m)^2/3, the extension estimate R^-1"));
  b.compose("high_raw", "local_rule", "mu_R", endpoint("multiplicity substituted into the L^10/3 endpoint"));
  b.axiom("mass_by_m", Bound{"mass", Relation::UpperApprox, {{"m", Rational(1)}}, Loss::Sharp, {}},
          endpoint("an m-parallel family has mass at most m"));
  std::string high = "high_m";
  b.compose(high, "high_raw", "mass_by_m", endpoint("mass <= m"));
  for (const char* sym : {"m", "h"}) {
    if (b.get(high).rhs.contains(sym)) {
      const std::string id = std::string("high_no_") + sym;
      b.drop(id, high, sym, endpoint(std::string(sym) + " >= 1"));
      high = id;
    }
  }
  b.axiom("low", Bound{"normalized_integral", Relation::UpperApprox, {{"lambda", Rational(1)}, {"R", Rational(1)}},
                       Loss::EpsPower, {}},
          endpoint("L^2 endpoint from orthogonality"));

  // Feasible weights theta for interpolate(low, high, theta): every leftover
  // exponent must have the sign that lets it be dropped.
  const Bound& lo_b = b.get("low");
  const Bound& hi_b = b.get(high);
  Rational t_low(0), t_high(1);
  std::string binding;
  std::map<std::string, bool> symbols;
  for (const auto& [s, e] : lo_b.rhs.entries()) symbols[s] = true;
  for (const auto& [s, e] : hi_b.rhs.entries()) symbols[s] = true;
  // Prefer lambda as the binding symbol when several bind at the same weight.
  std::vector<std::string> order;
  if (symbols.count("lambda")) order.push_back("lambda");
  for (const auto& [s, unused] : symbols) {
    if (s != "lambda") order.push_back(s);
  }
  for (const auto& s : order) {
    const Domain d = SymbolTable::standard().domain(s);
    const Rational e1 = lo_b.rhs.get(s);
    const Rational e2 = hi_b.rhs.get(s);
    // e(theta) = e2 + theta (e1 - e2); need e >= 0 (AtMostOne) or e <= 0 (AtLeastOne).
    const Rational slope = e1 - e2;
    const int want = d == Domain::AtMostOne ? 1 : -1;
    if (slope.is_zero()) {
      if (e2.sign() * want < 0) throw CalculusError(ErrorKind::NoSolution, "exponent of " + s + " cannot be dropped");
      continue;
    }
    const Rational root = -e2 / slope;
    if (slope.sign() * want > 0) {
      if (root > t_low) t_low = root;
    } else {
      if (root < t_high || (root == t_high && binding.empty())) {
        t_high = root;
        binding = s;
      }
    }
  }
  if (t_low > t_high) {
    throw CalculusError(ErrorKind::WeightOutOfRange, "no weight leaves droppable exponents");
  }
  if (binding.empty()) throw CalculusError(ErrorKind::NoSolution, "no symbol limits the weight from above");
  const Rational theta = b.solve_weight("low", high, binding, Rational(0));
  if (theta != t_high) throw CalculusError(ErrorKind::ContractViolation, "weight solving disagrees with feasible range");

  b.interpolate("interpolated", "low", high, theta, endpoint("interpolate the two endpoints"));
  std::string last = "interpolated";
  for (const auto& [s, e] : b.get("interpolated").rhs.entries()) {
    const std::string id = "final_no_" + s;
    b.drop(id, last, s, endpoint("leftover factor bounded by 1"));
    last = id;
  }

  RestrictionResult r;
  r.theta = theta;
  r.p = Rational(2) * theta + kHighExponent * (Rational(1) - theta);
  r.theta_low = t_low;
  r.theta_high = t_high;
  r.binding_symbol = binding;
  r.endpoint_high = b.get(high);
  r.endpoint_low = b.get("low");
  b.result("theta", theta);
  b.result("theta_low", t_low);
  b.result("theta_high", t_high);
  b.result("binding_symbol", binding);
  b.result("p", r.p);
  r.trace = b.take();
  return r;
}

RestrictionResult derive_restriction_exponent() {
  const IncidenceResult inc = derive_lemma_incidence();
  const Bound mu_m = double_count(inc.volume_m_parallel, DoubleCountFrame::unit_scale(), "mu_m_parallel");
  RestrictionResult r = derive_restriction_from(mu_m, "restriction-exponent");
  const ExponentVector expected{{"lambda", Rational(-101, 150)}, {"R", Rational(-101, 150)}};
  for (const char* s : {"lambda", "R"}) {
    if (r.endpoint_high.rhs.get(s) != expected.get(s)) {
      throw DerivationMismatch("high endpoint", s, expected.get(s), r.endpoint_high.rhs.get(s));
    }
  }
  if (r.endpoint_high.rhs.size() != 2) {
    throw DerivationMismatch("high endpoint", "extra symbols", Rational(2), Rational(static_cast<long>(r.endpoint_high.rhs.size())));
  }
  if (r.theta != Rational(101, 251)) throw DerivationMismatch("interpolated", "theta", Rational(101, 251), r.theta);
  if (r.p != Rational(702, 251)) throw DerivationMismatch("interpolated", "p", Rational(702, 251), r.p);
  return r;
}

RestrictionResult derive_restriction_hairbrush_fixture() {
  return derive_restriction_from(base_bounds().at(kHairbrush), "restriction-hairbrush-fixture");
}

}  // namespace tubenum
