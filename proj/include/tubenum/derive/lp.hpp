#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubenum/calculus/bound.hpp"

namespace tubenum {

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational rhs;
  enum class Kind { Equal, AtLeast, AtMost } kind = Kind::Equal;
};

struct LpSolution {
  bool feasible = false;
  Rational value;
  std::vector<Rational> x;
};

/// Exact maximization of objective.x over a bounded polytope by enumerating
/// its vertices. Only meant for a handful of variables and constraints.
LpSolution maximize_over_polytope(const std::vector<Rational>& objective,
                                  const std::vector<LinearConstraint>& constraints);

/// Search over convex combinations of upper bounds on one quantity: maximize
/// the exponent of `objective_sym` with `fixed_sym` pinned to `fixed_value`,
/// `floor_sym` at least `floor_value`, and every other exponent of a sign that
/// lets it be dropped.
struct CombinationSearch {
  std::vector<Bound> candidates;
  std::string objective_sym;
  std::string fixed_sym;
  Rational fixed_value;
  std::string floor_sym;
  Rational floor_value;
};

struct CombinationResult {
  LpSolution solution;
  ExponentVector combined;  // exponents of the optimal combination
};

CombinationResult best_combination(const CombinationSearch& search);

}  // namespace tubenum
