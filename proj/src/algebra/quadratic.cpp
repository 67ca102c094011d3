#include "tubenum/algebra/quadratic.hpp"

#include <stdexcept>

namespace tubenum {

namespace {

mpz_class isqrt_floor(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class pow10(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("squarefree_split needs a positive integer");
  constexpr unsigned long kTrialLimit = 1000000;
  mpz_class rest = n;
  mpz_class square_root = 1;
  mpz_class free = 1;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    int count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (int i = 0; i + 1 < count; i += 2) square_root *= p;
    if (count % 2 == 1) free *= p;
  }
  if (rest > 1) {
    // Every prime factor of rest exceeds the trial limit. Below limit^3 it is
    // a prime, a product of two primes or a prime squared.
    const mpz_class limit(kTrialLimit);
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      square_root *= isqrt_floor(rest);
    } else if (rest < limit * limit * limit) {
      free *= rest;
    } else {
      throw std::domain_error("radicand " + n.get_str() + " too large to split");
    }
  }
  return {square_root, free};
}

QuadraticNumber::QuadraticNumber(const Rational& a) : a_(a) {}

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, const mpz_class& d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadraticNumber::normalize() {
  if (d_ == 0 || b_.is_zero()) {
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  auto [s, f] = squarefree_split(d_);
  b_ *= Rational(s, mpz_class(1));
  d_ = f;
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = 0;
  }
}

QuadraticNumber QuadraticNumber::sqrt(const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("square root of a negative rational");
  if (r.is_zero()) return {};
  // sqrt(p/q) = sqrt(p*q)/q
  return QuadraticNumber(Rational(0), Rational(mpz_class(1), r.denominator()), r.numerator() * r.denominator());
}

Rational QuadraticNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error(str() + " is irrational");
  return a_;
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational a2 = a_ * a_;
  const Rational b2d = b_ * b_ * Rational(d_, mpz_class(1));
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  return 0;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.b_ = -b_;
  return out;
}

Rational QuadraticNumber::norm() const { return a_ * a_ - b_ * b_ * Rational(d_, mpz_class(1)); }

const mpz_class& QuadraticNumber::common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw std::domain_error("mixed radicands sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  const mpz_class d = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  const mpz_class d = common_radicand(*this, o);
  const Rational dd(d, mpz_class(1));
  const Rational a = a_ * o.a_ + b_ * o.b_ * dd;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str() + (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) out = "-";
  const Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  return out;
}

std::string QuadraticNumber::fraction_str() const {
  if (is_rational()) return a_.str();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a_.denominator().get_mpz_t(), b_.denominator().get_mpz_t());
  const mpz_class big_a = a_.numerator() * (l / a_.denominator());
  const mpz_class big_b = b_.numerator() * (l / b_.denominator());
  std::string out;
  if (big_a != 0) out = big_a.get_str() + (big_b < 0 ? " - " : " + ");
  else if (big_b < 0) out = "-";
  const mpz_class mag = abs(big_b);
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  if (l == 1) return out;
  return "(" + out + ")/" + l.get_str();
}

mpz_class QuadraticNumber::floor_scaled(int digits) const {
  // floor((P + Q sqrt d) / L) = floor((P + floor(Q sqrt d)) / L) for L > 0.
  const mpz_class scale = pow10(digits);
  const Rational sa = a_ * Rational(scale, mpz_class(1));
  const Rational sb = b_ * Rational(scale, mpz_class(1));
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), sa.denominator().get_mpz_t(), sb.denominator().get_mpz_t());
  const mpz_class p = sa.numerator() * (l / sa.denominator());
  const mpz_class q = sb.numerator() * (l / sb.denominator());
  mpz_class floor_q_root_d;
  if (q >= 0) {
    floor_q_root_d = isqrt_floor(q * q * d_);
  } else {
    const mpz_class m = q * q * d_;
    const mpz_class r = isqrt_floor(m);
    floor_q_root_d = (r * r == m) ? mpz_class(-r) : mpz_class(-r - 1);
  }
  return floor_div(p + floor_q_root_d, l);
}

std::string QuadraticNumber::decimal(int digits) const {
  if (digits < 0) digits = 0;
  // Round half up: floor(x * 10^k + 1/2).
  const QuadraticNumber shifted = *this + QuadraticNumber(Rational(1, 2) / Rational(pow10(digits), mpz_class(1)));
  return format_scaled_decimal(shifted.floor_scaled(digits), digits);
}

double QuadraticNumber::to_double() const {
  // 40 digits is far beyond double precision.
  const mpz_class f = floor_scaled(40);
  mpf_class v(f, 256);
  mpf_class s(pow10(40), 256);
  v /= s;
  return v.get_d();
}

}  // namespace tubenum
