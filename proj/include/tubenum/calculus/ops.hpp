#pragma once

#include <string>
#include <utility>

#include "tubenum/calculus/bound.hpp"
#include "tubenum/calculus/symbol.hpp"

namespace tubenum {

// Every operation appends `step` to the provenance of its result. Inputs are
// never modified.

/// Convex combination t*b1 + (1-t)*b2 of the exponent vectors.
Bound interpolate(const Bound& b1, const Bound& b2, const Rational& t,
                  const std::string& step = "interpolate");

/// Weight t with interpolate(b1, b2, t).rhs[sym] == target.
Rational solve_weight(const Bound& b1, const Bound& b2, const std::string& sym,
                      const Rational& target);

/// solve_weight with target 0 followed by interpolate; sym is absent from the
/// resulting bound.
std::pair<Rational, Bound> eliminate(const Bound& b1, const Bound& b2, const std::string& sym,
                                     const std::string& step = "eliminate");

/// Substitute inner into the factor inner.quantity^e of outer. Sound when the
/// relations agree and e > 0, or the relations are opposite and e < 0.
Bound compose(const Bound& outer, const Bound& inner, const std::string& step = "compose");

/// Replace sym by the replacement monomial everywhere in the right-hand side.
Bound substitute_rescale(const Bound& b, const std::string& sym,
                         const ExponentVector& replacement,
                         const std::string& step = "substitute_rescale",
                         const SymbolTable& table = SymbolTable::standard());

/// Remove a factor whose value is <= 1 on the side that keeps the bound valid.
Bound drop_bounded(const Bound& b, const std::string& sym,
                   const std::string& step = "drop_bounded",
                   const SymbolTable& table = SymbolTable::standard());

/// Names tying a volume, a multiplicity, a density and a mass together through
/// volume = mu^-1 * density * mass.
struct DoubleCountFrame {
  std::string volume = "volume";
  std::string mu = "mu";
  std::string density = "lambda";
  std::string mass = "mass";

  static DoubleCountFrame unit_scale();
  static DoubleCountFrame rho_scale();
};

/// volume >=~ V  <->  mu <=~ density * mass * V^-1 (and the mirrored pair).
Bound double_count(const Bound& b, const DoubleCountFrame& frame = DoubleCountFrame::unit_scale(),
                   const std::string& step = "double_count");

/// Multiply the right-hand side by a monomial that is >= 1 for upper bounds
/// (<= 1 for lower bounds). Each factor is checked against its symbol's
/// domain. `min_loss` widens the loss class.
Bound weaken(const Bound& b, const ExponentVector& factor, Loss min_loss,
             const std::string& step = "weaken",
             const SymbolTable& table = SymbolTable::standard());

/// Relabel the bounded quantity, e.g. a multiplicity bound proved for a
/// generic family used for the coarse family.
Bound rename_quantity(const Bound& b, const std::string& quantity,
                      const std::string& step = "rename_quantity");

}  // namespace tubenum
