#pragma once

#include <string>
#include <vector>

#include "tubenum/algebra/quadratic.hpp"

namespace tubenum {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> coefficients);  // NOLINT(google-explicit-constructor)

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator()(const Rational& x) const;
  QuadraticNumber operator()(const QuadraticNumber& x) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  static Polynomial x();
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial p, Polynomial q);
  /// Quotient and remainder; q must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct FixedPointReport {
  std::vector<QuadraticNumber> roots;     // ascending, real, map defined there
  std::vector<QuadraticNumber> spurious;  // roots where the denominator vanishes
  Rational discriminant;                  // of the cleared quadratic, 0 if degree < 2
  bool complex_pair = false;
  bool degenerate = false;                // every point is fixed
};

/// f(x) = numerator(x) / denominator(x), both of degree <= 2 and coprime.
class RationalMap {
 public:
  RationalMap(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool defined_at(const Rational& x) const { return !den_(x).is_zero(); }
  Rational operator()(const Rational& x) const;
  QuadraticNumber operator()(const QuadraticNumber& x) const;

  /// Real solutions of f(x) = x, solved exactly after clearing denominators.
  FixedPointReport fixed_points() const;

  std::string str(const std::string& var = "x") const;

  static RationalMap identity();

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace tubenum
