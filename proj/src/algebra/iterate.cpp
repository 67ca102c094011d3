#include "tubenum/algebra/iterate.hpp"

namespace tubenum {

const char* to_string(IterateStatus s) {
  switch (s) {
    case IterateStatus::Converged: return "Converged";
    case IterateStatus::MaxIterations: return "MaxIterations";
    case IterateStatus::DomainExit: return "DomainExit";
  }
  return "?";
}

Trajectory iterate(const RationalMap& map, const Rational& x0, const IterateOptions& options) {
  Trajectory out;
  out.iterates.push_back(x0);

  auto close_enough = [&](const Rational& prev, const Rational& next) {
    if (options.fixed_point) {
      const QuadraticNumber gap = QuadraticNumber(next) - *options.fixed_point;
      const QuadraticNumber abs_gap = gap.sign() < 0 ? -gap : gap;
      return abs_gap < QuadraticNumber(options.tol);
    }
    return (next - prev).abs() < options.tol;
  };

  if (options.fixed_point && close_enough(x0, x0)) {
    out.status = IterateStatus::Converged;
    return out;
  }

  for (int k = 0; k < options.max_iter; ++k) {
    const Rational prev = out.iterates.back();
    if (!map.defined_at(prev)) {
      out.status = IterateStatus::DomainExit;
      out.message = "map undefined at iterate " + std::to_string(k);
      return out;
    }
    Rational next = map(prev);
    if (options.rounding != Rounding::None && next.denominator_bits() > options.round_bits) {
      next = options.rounding == Rounding::Up ? next.round_up_to_bits(options.round_bits)
                                              : next.round_down_to_bits(options.round_bits);
      ++out.rounded_steps;
    }
    if ((options.lower && next < *options.lower) || (options.upper && next > *options.upper)) {
      out.status = IterateStatus::DomainExit;
      out.message = "iterate " + std::to_string(k + 1) + " = " + next.decimal(12) + " leaves the domain";
      return out;
    }
    if (!(next < prev)) out.strictly_decreasing = false;
    if (next > prev) out.non_increasing = false;
    out.iterates.push_back(next);
    if (close_enough(prev, next)) {
      out.status = IterateStatus::Converged;
      return out;
    }
  }
  out.status = IterateStatus::MaxIterations;
  return out;
}

}  // namespace tubenum
