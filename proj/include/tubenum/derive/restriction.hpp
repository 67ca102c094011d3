#pragma once

#include <string>

#include "tubenum/derive/derivation.hpp"

namespace tubenum {

struct RestrictionResult {
  Rational theta;           // weight on the L^2 endpoint
  Rational p;               // 2 theta + (10/3)(1 - theta)
  Rational theta_low;       // feasible weights: every leftover exponent droppable
  Rational theta_high;
  std::string binding_symbol;
  Bound endpoint_high;      // L^{10/3} endpoint after dropping m and h
  Bound endpoint_low;       // L^2 endpoint
  Derivation trace;
};

/// Runs the L^{10/3} / L^2 interpolation starting from an upper bound on mu
/// for m-parallel families (exponents in lambda, delta, mass and m).
RestrictionResult derive_restriction_from(const Bound& multiplicity, const std::string& name);

/// Uses the multiplicity estimate from derive_lemma_incidence and asserts
/// theta = 101/251, p = 702/251.
RestrictionResult derive_restriction_exponent();

/// Same pipeline fed with the plain hairbrush estimate. Kept as a regression
/// fixture; nothing is asserted about its output.
RestrictionResult derive_restriction_hairbrush_fixture();

}  // namespace tubenum
