#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tubenum/calculus/exponent_vector.hpp"

namespace tubenum {

enum class Relation { UpperApprox, LowerApprox };

/// Unquantified loss carried by a bound, ordered by severity. Losses only
/// widen: combining bounds takes the maximum.
enum class Loss { Sharp = 0, PolyLog = 1, EpsPower = 2 };

const char* to_string(Relation r);
const char* to_string(Loss l);
Relation opposite(Relation r);
Loss combine(Loss a, Loss b);

struct Bound {
  std::string quantity;
  Relation relation = Relation::UpperApprox;
  ExponentVector rhs;
  Loss loss = Loss::Sharp;
  std::vector<std::string> provenance;

  /// Compares the mathematical content only; provenance is ignored.
  bool same_statement(const Bound& other) const;
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Throws ContractViolation if the quantity occurs in the right-hand side.
void check_well_formed(const Bound& b);

/// Canonical text form, e.g. "mu <=~ delta^-1 * lambda^-3/4 ~eps".
std::string to_text(const Bound& b);
/// Inverse of to_text. Provenance is left empty.
Bound parse_bound(std::string_view text);

}  // namespace tubenum
