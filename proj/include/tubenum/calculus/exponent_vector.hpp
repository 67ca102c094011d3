#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "tubenum/calculus/rational.hpp"

namespace tubenum {

/// Exponents of a single monomial in named positive parameters. Zero entries
/// are never stored, so equality is plain map equality.
class ExponentVector {
 public:
  using Map = std::map<std::string, Rational>;

  ExponentVector() = default;
  ExponentVector(std::initializer_list<std::pair<const std::string, Rational>> entries);
  explicit ExponentVector(const Map& entries);

  Rational get(const std::string& sym) const;
  void set(const std::string& sym, const Rational& value);
  void erase(const std::string& sym) { entries_.erase(sym); }
  bool contains(const std::string& sym) const { return entries_.count(sym) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  ExponentVector& operator*=(const Rational& scale);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(const Rational& s, ExponentVector v) { return v *= s; }
  friend ExponentVector operator*(ExponentVector v, const Rational& s) { return v *= s; }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// Replace sym^e by replacement^e. A sym absent from the vector is a no-op.
  ExponentVector substituted(const std::string& sym, const ExponentVector& replacement) const;

  /// "delta^-1 * lambda^-3/4 * mass^1/2", or "1" for the empty monomial.
  std::string str() const;

 private:
  Map entries_;
};

}  // namespace tubenum
