#include "tubenum/calculus/bound.hpp"

#include <algorithm>
#include <sstream>

#include "tubenum/calculus/error.hpp"

namespace tubenum {

const char* to_string(Relation r) { return r == Relation::UpperApprox ? "UpperApprox" : "LowerApprox"; }

const char* to_string(Loss l) {
  switch (l) {
    case Loss::Sharp: return "Sharp";
    case Loss::PolyLog: return "PolyLog";
    case Loss::EpsPower: return "EpsPower";
  }
  return "?";
}

Relation opposite(Relation r) {
  return r == Relation::UpperApprox ? Relation::LowerApprox : Relation::UpperApprox;
}

Loss combine(Loss a, Loss b) { return std::max(a, b); }

bool Bound::same_statement(const Bound& other) const {
  return quantity == other.quantity && relation == other.relation && rhs == other.rhs && loss == other.loss;
}

void check_well_formed(const Bound& b) {
  if (b.quantity.empty()) throw CalculusError(ErrorKind::ContractViolation, "bound without a quantity");
  if (b.rhs.contains(b.quantity)) {
    throw CalculusError(ErrorKind::ContractViolation, "quantity '" + b.quantity + "' occurs in its own bound");
  }
}

std::string to_text(const Bound& b) {
  std::string out = b.quantity;
  out += b.relation == Relation::UpperApprox ? " <=~ " : " >=~ ";
  out += b.rhs.str();
  if (b.loss == Loss::PolyLog) out += " ~log";
  if (b.loss == Loss::EpsPower) out += " ~eps";
  return out;
}

Bound parse_bound(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  auto fail = [&](const std::string& why) -> CalculusError {
    return CalculusError(ErrorKind::Parse, why + " in '" + std::string(text) + "'");
  };
  if (tokens.size() < 3) throw fail("too few tokens");

  Bound b;
  b.quantity = tokens[0];
  if (tokens[1] == "<=~") {
    b.relation = Relation::UpperApprox;
  } else if (tokens[1] == ">=~") {
    b.relation = Relation::LowerApprox;
  } else {
    throw fail("expected '<=~' or '>=~'");
  }

  std::size_t end = tokens.size();
  if (tokens.back() == "~log") {
    b.loss = Loss::PolyLog;
    --end;
  } else if (tokens.back() == "~eps") {
    b.loss = Loss::EpsPower;
    --end;
  }
  if (end == 3 && tokens[2] == "1") return b;

  for (std::size_t i = 2; i < end; ++i) {
    if ((i - 2) % 2 == 1) {
      if (tokens[i] != "*") throw fail("expected '*'");
      if (i + 1 == end) throw fail("dangling '*'");
      continue;
    }
    const auto caret = tokens[i].find('^');
    if (caret == std::string::npos || caret == 0) throw fail("malformed factor '" + tokens[i] + "'");
    const std::string sym = tokens[i].substr(0, caret);
    if (b.rhs.contains(sym)) throw fail("repeated symbol '" + sym + "'");
    Rational e;
    try {
      e = Rational::parse(tokens[i].substr(caret + 1));
    } catch (const std::exception&) {
      throw fail("bad exponent in '" + tokens[i] + "'");
    }
    if (e.is_zero()) throw fail("zero exponent for '" + sym + "'");
    b.rhs.set(sym, e);
  }
  check_well_formed(b);
  return b;
}

}  // namespace tubenum
