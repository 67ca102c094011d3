#include "tubenum/calculus/ops.hpp"

#include <algorithm>

#include "tubenum/calculus/error.hpp"

namespace tubenum {

namespace {

std::vector<std::string> merged_provenance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                           const std::string& step) {
  std::vector<std::string> out = a;
  for (const auto& s : b) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  out.push_back(step);
  return out;
}

void require_compatible(const Bound& b1, const Bound& b2) {
  if (b1.quantity != b2.quantity) {
    throw CalculusError(ErrorKind::ContractViolation,
                        "bounds on different quantities: '" + b1.quantity + "' vs '" + b2.quantity + "'");
  }
  if (b1.relation != b2.relation) {
    throw CalculusError(ErrorKind::ContractViolation, "bounds with opposite relations on '" + b1.quantity + "'");
  }
}

// True when sym^e <= 1 is guaranteed by the symbol's domain.
bool factor_at_most_one(Domain d, const Rational& e) {
  if (e.is_zero()) return true;
  if (d == Domain::AtMostOne) return e.sign() > 0;
  if (d == Domain::AtLeastOne) return e.sign() < 0;
  return false;
}

bool factor_at_least_one(Domain d, const Rational& e) {
  if (e.is_zero()) return true;
  if (d == Domain::AtMostOne) return e.sign() < 0;
  if (d == Domain::AtLeastOne) return e.sign() > 0;
  return false;
}

}  // namespace

Bound interpolate(const Bound& b1, const Bound& b2, const Rational& t, const std::string& step) {
  require_compatible(b1, b2);
  if (t < Rational(0) || t > Rational(1)) {
    throw CalculusError(ErrorKind::WeightOutOfRange, "interpolation weight " + t.str() + " outside [0,1]");
  }
  Bound out;
  out.quantity = b1.quantity;
  out.relation = b1.relation;
  out.rhs = t * b1.rhs + (Rational(1) - t) * b2.rhs;
  out.loss = combine(b1.loss, b2.loss);
  out.provenance = merged_provenance(b1.provenance, b2.provenance, step);
  return out;
}

Rational solve_weight(const Bound& b1, const Bound& b2, const std::string& sym, const Rational& target) {
  require_compatible(b1, b2);
  const Rational e1 = b1.rhs.get(sym);
  const Rational e2 = b2.rhs.get(sym);
  if (e1 == e2) {
    if (e2 == target) return Rational(0);
    throw CalculusError(ErrorKind::NoSolution, "both bounds have " + sym + "^" + e1.str() + ", target " + target.str());
  }
  const Rational t = (target - e2) / (e1 - e2);
  if (t < Rational(0) || t > Rational(1)) {
    throw CalculusError(ErrorKind::WeightOutOfRange,
                        "weight " + t.str() + " for " + sym + " (exponents " + e1.str() + ", " + e2.str() +
                            ", target " + target.str() + ")");
  }
  return t;
}

std::pair<Rational, Bound> eliminate(const Bound& b1, const Bound& b2, const std::string& sym,
                                     const std::string& step) {
  const Rational t = solve_weight(b1, b2, sym, Rational(0));
  Bound out = interpolate(b1, b2, t, step);
  out.rhs.erase(sym);
  return {t, out};
}

Bound compose(const Bound& outer, const Bound& inner, const std::string& step) {
  check_well_formed(inner);
  const Rational e = outer.rhs.get(inner.quantity);
  Bound out = outer;
  if (e.is_zero()) {
    out.provenance.push_back(step);
    return out;
  }
  const bool same = outer.relation == inner.relation;
  if (!((same && e.sign() > 0) || (!same && e.sign() < 0))) {
    throw CalculusError(ErrorKind::DirectionUnsound,
                        "substituting a " + std::string(to_string(inner.relation)) + " bound for " + inner.quantity +
                            "^" + e.str() + " inside a " + to_string(outer.relation) + " bound");
  }
  out.rhs = outer.rhs.substituted(inner.quantity, inner.rhs);
  out.loss = combine(outer.loss, inner.loss);
  out.provenance = merged_provenance(outer.provenance, inner.provenance, step);
  check_well_formed(out);
  return out;
}

Bound substitute_rescale(const Bound& b, const std::string& sym, const ExponentVector& replacement,
                         const std::string& step, const SymbolTable& table) {
  table.domain(sym);
  for (const auto& [name, value] : replacement.entries()) table.domain(name);
  Bound out = b;
  out.rhs = b.rhs.substituted(sym, replacement);
  out.provenance.push_back(step);
  check_well_formed(out);
  return out;
}

Bound drop_bounded(const Bound& b, const std::string& sym, const std::string& step, const SymbolTable& table) {
  const Domain d = table.domain(sym);
  const Rational e = b.rhs.get(sym);
  Bound out = b;
  out.provenance.push_back(step);
  if (e.is_zero()) return out;
  const bool ok = b.relation == Relation::UpperApprox ? factor_at_most_one(d, e) : factor_at_least_one(d, e);
  if (!ok) {
    throw CalculusError(ErrorKind::DirectionUnsound, "cannot drop " + sym + "^" + e.str() + " (" + to_string(d) +
                                                         ") from a " + to_string(b.relation) + " bound");
  }
  out.rhs.erase(sym);
  return out;
}

DoubleCountFrame DoubleCountFrame::unit_scale() { return {}; }

DoubleCountFrame DoubleCountFrame::rho_scale() { return {"volume_rho", "mu_rho", "lambda", "mass_rho"}; }

Bound double_count(const Bound& b, const DoubleCountFrame& frame, const std::string& step) {
  check_well_formed(b);
  std::string target;
  if (b.quantity == frame.volume) {
    target = frame.mu;
  } else if (b.quantity == frame.mu) {
    target = frame.volume;
  } else {
    throw CalculusError(ErrorKind::ContractViolation,
                        "double counting applies to '" + frame.volume + "' or '" + frame.mu + "', not '" +
                            b.quantity + "'");
  }
  Bound out;
  out.quantity = target;
  out.relation = opposite(b.relation);
  out.rhs = ExponentVector{{frame.density, Rational(1)}, {frame.mass, Rational(1)}} - b.rhs;
  out.loss = b.loss;
  out.provenance = b.provenance;
  out.provenance.push_back(step);
  check_well_formed(out);
  return out;
}

Bound weaken(const Bound& b, const ExponentVector& factor, Loss min_loss, const std::string& step,
             const SymbolTable& table) {
  for (const auto& [sym, e] : factor.entries()) {
    const Domain d = table.domain(sym);
    const bool ok = b.relation == Relation::UpperApprox ? factor_at_least_one(d, e) : factor_at_most_one(d, e);
    if (!ok) {
      throw CalculusError(ErrorKind::DirectionUnsound, "factor " + sym + "^" + e.str() + " (" + to_string(d) +
                                                           ") strengthens a " + to_string(b.relation) + " bound");
    }
  }
  Bound out = b;
  out.rhs += factor;
  out.loss = combine(b.loss, min_loss);
  out.provenance.push_back(step);
  check_well_formed(out);
  return out;
}

Bound rename_quantity(const Bound& b, const std::string& quantity, const std::string& step) {
  Bound out = b;
  out.quantity = quantity;
  out.provenance.push_back(step);
  check_well_formed(out);
  return out;
}

}  // namespace tubenum
