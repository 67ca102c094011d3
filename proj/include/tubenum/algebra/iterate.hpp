#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubenum/algebra/rational_map.hpp"

namespace tubenum {

enum class IterateStatus { Converged, MaxIterations, DomainExit };
const char* to_string(IterateStatus s);

/// How iterates are kept from growing without bound in bit size.
enum class Rounding { None, Up, Down };

struct IterateOptions {
  Rational tol = Rational(1, 1000000000000L);
  int max_iter = 10000;
  /// Exact limit to measure convergence against. Without it, successive
  /// differences are used.
  std::optional<QuadraticNumber> fixed_point;
  /// Iterates leaving [lower, upper] end the run with DomainExit.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  /// Once an iterate's denominator exceeds 2^round_bits it is rounded to a
  /// multiple of 2^-round_bits in the given direction.
  Rounding rounding = Rounding::Up;
  unsigned round_bits = 256;
};

struct Trajectory {
  std::vector<Rational> iterates;  // x0, x1, ..., last valid
  IterateStatus status = IterateStatus::MaxIterations;
  bool strictly_decreasing = true;
  bool non_increasing = true;
  int rounded_steps = 0;
  std::string message;
};

Trajectory iterate(const RationalMap& map, const Rational& x0, const IterateOptions& options = {});

}  // namespace tubenum
