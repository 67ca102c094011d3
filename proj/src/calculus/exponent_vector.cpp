#include "tubenum/calculus/exponent_vector.hpp"

namespace tubenum {

ExponentVector::ExponentVector(std::initializer_list<std::pair<const std::string, Rational>> entries) {
  for (const auto& [sym, value] : entries) set(sym, get(sym) + value);
}

ExponentVector::ExponentVector(const Map& entries) {
  for (const auto& [sym, value] : entries) set(sym, value);
}

Rational ExponentVector::get(const std::string& sym) const {
  auto it = entries_.find(sym);
  return it == entries_.end() ? Rational(0) : it->second;
}

void ExponentVector::set(const std::string& sym, const Rational& value) {
  if (value.is_zero()) {
    entries_.erase(sym);
  } else {
    entries_[sym] = value;
  }
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  for (const auto& [sym, value] : other.entries_) set(sym, get(sym) + value);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  for (const auto& [sym, value] : other.entries_) set(sym, get(sym) - value);
  return *this;
}

ExponentVector& ExponentVector::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [sym, value] : entries_) value *= scale;
  return *this;
}

ExponentVector ExponentVector::substituted(const std::string& sym, const ExponentVector& replacement) const {
  const Rational e = get(sym);
  if (e.is_zero()) return *this;
  ExponentVector out = *this;
  out.erase(sym);
  out += e * replacement;
  return out;
}

std::string ExponentVector::str() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [sym, value] : entries_) {
    if (!out.empty()) out += " * ";
    out += sym + "^" + value.str();
  }
  return out;
}

}  // namespace tubenum
