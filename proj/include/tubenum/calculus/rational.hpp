#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tubenum {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Accepts "p", "p/q", and plain or scientific decimals ("0.25", "1e-9").
  /// Decimals are converted exactly.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Rounded decimal with `digits` digits after the point, computed exactly.
  std::string decimal(int digits) const;

  mpz_class floor() const;
  mpz_class ceil() const;
  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(int exponent) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Smallest rational with denominator 2^bits that is >= this value.
  Rational round_up_to_bits(unsigned bits) const;
  /// Largest rational with denominator 2^bits that is <= this value.
  Rational round_down_to_bits(unsigned bits) const;
  std::size_t denominator_bits() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Exact floor(n / d) for d > 0.
mpz_class floor_div(const mpz_class& n, const mpz_class& d);

/// Renders floor-based rounding of an exact value `scaled / 10^digits` as a
/// signed decimal string. Shared by Rational and QuadraticNumber printing.
std::string format_scaled_decimal(const mpz_class& scaled, int digits);

}  // namespace tubenum

template <>
struct std::hash<tubenum::Rational> {
  std::size_t operator()(const tubenum::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
