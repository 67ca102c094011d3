#pragma once

#include <compare>
#include <string>

#include "tubenum/calculus/rational.hpp"

namespace tubenum {

/// a + b*sqrt(d) with d a nonnegative squarefree integer. Rationals are stored
/// with d = 0 and b = 0; d = 1 is folded into a.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(int a) : QuadraticNumber(Rational(a)) {}  // NOLINT
  /// d need not be squarefree; square factors are moved into b.
  QuadraticNumber(const Rational& a, const Rational& b, const mpz_class& d);

  /// Exact square root of a nonnegative rational.
  static QuadraticNumber sqrt(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const mpz_class& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  /// Throws unless is_rational().
  Rational to_rational() const;

  int sign() const;
  QuadraticNumber conjugate() const;
  /// a^2 - d b^2.
  Rational norm() const;

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);
  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  QuadraticNumber operator-() const;

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a + b*sqrt(d)" with exact rationals, or just "a" when rational.
  std::string str() const;
  /// Single-fraction form "(A + B*sqrt(d))/L" with integers A, B, L.
  std::string fraction_str() const;
  /// Round-half-up decimal with `digits` digits after the point, exact.
  std::string decimal(int digits) const;
  /// floor(x * 10^digits), exact.
  mpz_class floor_scaled(int digits) const;
  double to_double() const;

 private:
  void normalize();
  static const mpz_class& common_radicand(const QuadraticNumber& x, const QuadraticNumber& y);

  Rational a_;
  Rational b_;
  mpz_class d_{0};
};

/// Splits a positive integer n as s^2 * f with f squarefree; returns {s, f}.
/// Throws std::domain_error if n has a prime factor too large to resolve.
std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n);

}  // namespace tubenum
