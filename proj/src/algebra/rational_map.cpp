#include "tubenum/algebra/rational_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace tubenum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadraticNumber Polynomial::operator()(const QuadraticNumber& x) const {
  QuadraticNumber acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadraticNumber(*it);
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = p.coefficient(static_cast<int>(i)) + q.coefficient(static_cast<int>(i));
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + Polynomial(std::vector<Rational>{Rational(-1)}) * q;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> quot(p.c_.size() >= q.c_.size() ? p.c_.size() - q.c_.size() + 1 : 0);
  Polynomial rem = p;
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    const int shift = rem.degree() - q.degree();
    const Rational factor = rem.c_.back() / q.c_.back();
    quot[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> term(static_cast<std::size_t>(shift) + 1);
    term.back() = factor;
    rem = rem - Polynomial(std::move(term)) * q;
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(Polynomial p, Polynomial q) {
  while (!q.is_zero()) {
    Polynomial r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  if (p.is_zero()) return p;
  const Rational lead = p.c_.back();
  for (auto& c : p.c_) c /= lead;
  return p;
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) out += mag.str();
    if (i > 0 && mag != Rational(1)) out += "*";
    if (i == 1) out += var;
    if (i > 1) out += var + "^" + std::to_string(i);
  }
  return out;
}

RationalMap::RationalMap(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("rational map with zero denominator");
  if (num_.degree() > 2 || den_.degree() > 2) throw std::invalid_argument("rational map of degree above 2");
  if (!num_.is_zero() && Polynomial::gcd(num_, den_).degree() > 0) {
    throw std::invalid_argument("numerator and denominator share a factor");
  }
}

Rational RationalMap::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw std::domain_error("map undefined at " + x.str());
  return num_(x) / d;
}

QuadraticNumber RationalMap::operator()(const QuadraticNumber& x) const {
  const QuadraticNumber d = den_(x);
  if (d.sign() == 0) throw std::domain_error("map undefined at " + x.str());
  return num_(x) / d;
}

FixedPointReport RationalMap::fixed_points() const {
  FixedPointReport report;
  const Polynomial cleared = num_ - Polynomial::x() * den_;
  if (cleared.is_zero()) {
    report.degenerate = true;
    return report;
  }
  if (cleared.degree() > 2) throw std::invalid_argument("fixed-point equation of degree above 2");

  std::vector<QuadraticNumber> candidates;
  if (cleared.degree() == 1) {
    candidates.emplace_back(-cleared.coefficient(0) / cleared.coefficient(1));
  } else if (cleared.degree() == 2) {
    const Rational a = cleared.coefficient(2);
    const Rational b = cleared.coefficient(1);
    const Rational c = cleared.coefficient(0);
    report.discriminant = b * b - Rational(4) * a * c;
    if (report.discriminant.sign() < 0) {
      report.complex_pair = true;
      return report;
    }
    const QuadraticNumber root_disc = QuadraticNumber::sqrt(report.discriminant);
    const QuadraticNumber two_a(Rational(2) * a);
    candidates.push_back((QuadraticNumber(-b) - root_disc) / two_a);
    if (!report.discriminant.is_zero()) candidates.push_back((QuadraticNumber(-b) + root_disc) / two_a);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    if (den_(r).sign() == 0) {
      report.spurious.push_back(r);
    } else {
      report.roots.push_back(r);
    }
  }
  return report;
}

std::string RationalMap::str(const std::string& var) const {
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalMap RationalMap::identity() { return RationalMap(Polynomial::x(), Polynomial({Rational(1)})); }

}  // namespace tubenum
