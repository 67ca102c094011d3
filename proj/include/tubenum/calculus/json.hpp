#pragma once

#include <nlohmann/json.hpp>

#include "tubenum/calculus/bound.hpp"

namespace tubenum {

// Rationals are written as strings ("-49/50") so that no precision is lost.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const ExponentVector& v);
void from_json(const nlohmann::json& j, ExponentVector& v);
void to_json(nlohmann::json& j, const Bound& b);
void from_json(const nlohmann::json& j, Bound& b);

}  // namespace tubenum
