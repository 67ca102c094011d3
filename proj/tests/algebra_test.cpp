#include <boost/multiprecision/mpfr.hpp>
#include <gtest/gtest.h>

#include <random>

#include "tubenum/algebra/iterate.hpp"
#include "tubenum/algebra/quadratic.hpp"
#include "tubenum/algebra/rational_map.hpp"
#include "tubenum/derive/self_improve.hpp"

namespace tubenum {
namespace {

using Big = boost::multiprecision::mpfr_float_100;

Big big(const Rational& r) { return Big(r.numerator().get_str()) / Big(r.denominator().get_str()); }

Big big(const QuadraticNumber& q) {
  Big v = big(q.a());
  if (!q.is_rational()) v += big(q.b()) * boost::multiprecision::sqrt(Big(q.d().get_str()));
  return v;
}

// Closed form of the improved exponent, evaluated in floating point.
Big alpha_prime_oracle(const Big& a) { return 1 - (18 - 17 * a) * (3 - 2 * a) / (54 * (2 - a)); }

Big alpha_star_oracle() { return Big(15) / 8 - Big(3) / 40 * boost::multiprecision::sqrt(Big(145)); }

TEST(Quadratic, ConjugateProductIsNorm) {
  const QuadraticNumber x(Rational(1), Rational(1), mpz_class(2));
  EXPECT_EQ(x * x.conjugate(), QuadraticNumber(Rational(-1)));
  EXPECT_EQ(x.norm(), Rational(-1));
}

TEST(Quadratic, RadicandIsMadeSquarefree) {
  const QuadraticNumber x(Rational(0), Rational(1), mpz_class(72));
  EXPECT_EQ(x.b(), Rational(6));
  EXPECT_EQ(x.d(), mpz_class(2));
  EXPECT_TRUE(QuadraticNumber::sqrt(Rational(9, 4)).is_rational());
  EXPECT_EQ(QuadraticNumber::sqrt(Rational(9, 4)).to_rational(), Rational(3, 2));
  const auto [s, f] = squarefree_split(mpz_class(300));
  EXPECT_EQ(s, mpz_class(10));
  EXPECT_EQ(f, mpz_class(3));
}

TEST(Quadratic, DivisionInvertsMultiplication) {
  const QuadraticNumber x(Rational(3, 7), Rational(-2, 5), mpz_class(145));
  const QuadraticNumber y(Rational(-1, 3), Rational(4), mpz_class(145));
  EXPECT_EQ((x * y) / y, x);
  EXPECT_EQ((x + y) - y, x);
}

TEST(Quadratic, SignAgreesWithHighPrecision) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> coef(-400, 400);
  std::uniform_int_distribution<long> den(1, 60);
  std::uniform_int_distribution<long> rad(2, 300);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const QuadraticNumber x(Rational(coef(gen), den(gen)), Rational(coef(gen), den(gen)), mpz_class(rad(gen)));
    const Big v = big(x);
    if (boost::multiprecision::abs(v) < Big("1e-60")) continue;
    EXPECT_EQ(x.sign(), v > 0 ? 1 : -1) << x.str();
    ++checked;
  }
  EXPECT_GT(checked, 1900);
}

TEST(Quadratic, FloorScaledAgreesWithHighPrecision) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> coef(-90, 90);
  std::uniform_int_distribution<long> den(1, 40);
  std::uniform_int_distribution<long> rad(2, 200);
  for (int i = 0; i < 300; ++i) {
    const QuadraticNumber x(Rational(coef(gen), den(gen)), Rational(coef(gen), den(gen)), mpz_class(rad(gen)));
    const Big scaled = boost::multiprecision::floor(big(x) * boost::multiprecision::pow(Big(10), 40));
    std::string text = scaled.str(0, std::ios_base::fixed);
    text = text.substr(0, text.find('.'));
    EXPECT_EQ(x.floor_scaled(40).get_str(), text) << x.str();
  }
}

TEST(Quadratic, DecimalRoundsHalfUp) {
  EXPECT_EQ(QuadraticNumber(Rational(1, 8)).decimal(2), "0.13");
  EXPECT_EQ(QuadraticNumber(Rational(-1, 8)).decimal(2), "-0.12");  // ties go toward +infinity
  EXPECT_EQ(QuadraticNumber::sqrt(Rational(2)).decimal(6), "1.414214");
}

TEST(Polynomial, DivmodReconstructs) {
  const Polynomial p({Rational(3), Rational(-1, 2), Rational(0), Rational(5, 3)});
  const Polynomial q({Rational(1), Rational(2)});
  const auto [quot, rem] = Polynomial::divmod(p, q);
  EXPECT_LT(rem.degree(), q.degree());
  EXPECT_EQ(quot * q + rem, p);
}

TEST(Polynomial, GcdIsMonicCommonFactor) {
  const Polynomial f({Rational(-2), Rational(1)});  // x - 2
  const Polynomial g = f * Polynomial({Rational(1), Rational(1)});
  const Polynomial h = f * Polynomial({Rational(5), Rational(0), Rational(3)});
  EXPECT_EQ(Polynomial::gcd(g, h), f);
}

TEST(RationalMap, AlphaPrimeMatchesClosedForm) {
  const RationalMap f = alpha_prime_map();
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> num(1, 999);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(gen), 1000);
    const Big diff = big(f(a)) - alpha_prime_oracle(big(a));
    EXPECT_LT(boost::multiprecision::abs(diff), Big("1e-80")) << a.str();
  }
}

TEST(RationalMap, FixedPointIsAlphaStar) {
  const QuadraticNumber& s = alpha_star();
  EXPECT_EQ(s, QuadraticNumber(Rational(15, 8), Rational(-3, 40), mpz_class(145)));
  EXPECT_EQ(alpha_prime_map()(s), s);
  EXPECT_LT(boost::multiprecision::abs(big(s) - alpha_star_oracle()), Big("1e-90"));
  EXPECT_LT(boost::multiprecision::abs(alpha_prime_oracle(alpha_star_oracle()) - alpha_star_oracle()), Big("1e-90"));

  const FixedPointReport r = alpha_prime_map().fixed_points();
  ASSERT_FALSE(r.degenerate);
  ASSERT_FALSE(r.complex_pair);
  bool found = false;
  for (const auto& root : r.roots) {
    EXPECT_EQ(alpha_prime_map()(root), root);
    found = found || root == s;
  }
  EXPECT_TRUE(found);
}

TEST(RationalMap, DimensionBoundClosedForm) {
  const QuadraticNumber expected(Rational(159, 56), Rational(1, 56), mpz_class(145));
  EXPECT_EQ(kakeya_d0(), expected);
  EXPECT_EQ(kakeya_d0(), QuadraticNumber(4) - alpha_double_prime_map()(alpha_star()));
  const Big oracle = (Big(159) + boost::multiprecision::sqrt(Big(145))) / 56;
  EXPECT_LT(boost::multiprecision::abs(big(kakeya_d0()) - oracle), Big("1e-90"));
  EXPECT_EQ(kakeya_d0().decimal(13), "3.0543141889070");
}

TEST(Iterate, ContractionConverges) {
  // x -> x/2 + 1 has fixed point 2.
  const RationalMap f(Polynomial({Rational(1), Rational(1, 2)}), Polynomial({Rational(1)}));
  IterateOptions opt;
  opt.fixed_point = QuadraticNumber(2);
  opt.tol = Rational(1, 1 << 20);
  const Trajectory t = iterate(f, Rational(0), opt);
  EXPECT_EQ(t.status, IterateStatus::Converged);
  EXPECT_EQ(t.iterates.back(), Rational(2) - Rational(1, 1 << 21));
  EXPECT_FALSE(t.strictly_decreasing);
}

TEST(Iterate, DomainExitStopsRun) {
  const RationalMap f(Polynomial({Rational(0), Rational(2)}), Polynomial({Rational(1)}));
  IterateOptions opt;
  opt.upper = Rational(100);
  const Trajectory t = iterate(f, Rational(1), opt);
  EXPECT_EQ(t.status, IterateStatus::DomainExit);
  EXPECT_EQ(t.iterates.back(), Rational(64));
}

TEST(Iterate, SelfImprovementMatchesFloatingOracle) {
  const Rational eps(1, 1000000000);
  const KakeyaIteration it = iterate_self_improvement(eps);

  std::vector<Big> oracle{Big(1)};
  const Big limit = alpha_star_oracle() + big(eps);
  while (oracle.back() >= limit) oracle.push_back(alpha_prime_oracle(oracle.back()));

  ASSERT_EQ(it.K, static_cast<int>(oracle.size()));
  ASSERT_EQ(it.trajectory.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_LT(boost::multiprecision::abs(big(it.trajectory[i]) - oracle[i]), Big("1e-70")) << i;
  }
  EXPECT_TRUE(it.strictly_decreasing);
  EXPECT_TRUE(it.above_fixed_point);
  EXPECT_TRUE(it.trajectory_window_ok);
  EXPECT_TRUE(it.interval_window.holds());
}

}  // namespace
}  // namespace tubenum
