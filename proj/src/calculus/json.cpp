#include "tubenum/calculus/json.hpp"

#include "tubenum/calculus/error.hpp"

namespace tubenum {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw CalculusError(ErrorKind::Parse, "expected a rational string, got " + j.dump());
  }
}

void to_json(nlohmann::json& j, const ExponentVector& v) {
  j = nlohmann::json::object();
  for (const auto& [sym, e] : v.entries()) j[sym] = e;
}

void from_json(const nlohmann::json& j, ExponentVector& v) {
  if (!j.is_object()) throw CalculusError(ErrorKind::Parse, "exponent vector must be an object");
  v = ExponentVector{};
  for (const auto& [sym, e] : j.items()) v.set(sym, e.get<Rational>());
}

void to_json(nlohmann::json& j, const Bound& b) {
  j = nlohmann::json{{"quantity", b.quantity},
                     {"relation", to_string(b.relation)},
                     {"rhs", b.rhs},
                     {"loss", to_string(b.loss)},
                     {"provenance", b.provenance},
                     {"text", to_text(b)}};
}

void from_json(const nlohmann::json& j, Bound& b) {
  b.quantity = j.at("quantity").get<std::string>();
  const auto rel = j.at("relation").get<std::string>();
  if (rel == "UpperApprox") {
    b.relation = Relation::UpperApprox;
  } else if (rel == "LowerApprox") {
    b.relation = Relation::LowerApprox;
  } else {
    throw CalculusError(ErrorKind::Parse, "unknown relation '" + rel + "'");
  }
  b.rhs = j.at("rhs").get<ExponentVector>();
  const auto loss = j.at("loss").get<std::string>();
  if (loss == "Sharp") {
    b.loss = Loss::Sharp;
  } else if (loss == "PolyLog") {
    b.loss = Loss::PolyLog;
  } else if (loss == "EpsPower") {
    b.loss = Loss::EpsPower;
  } else {
    throw CalculusError(ErrorKind::Parse, "unknown loss '" + loss + "'");
  }
  b.provenance = j.value("provenance", std::vector<std::string>{});
  check_well_formed(b);
}

}  // namespace tubenum
