#include <cmath>
#include <map>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "tubenum/calculus/bound.hpp"
#include "tubenum/calculus/error.hpp"
#include "tubenum/calculus/json.hpp"
#include "tubenum/calculus/ops.hpp"
#include "tubenum/calculus/rational.hpp"

namespace tubenum {
namespace {

// Oracle: a monomial evaluated in log space at a fixed random point.
using Point = std::map<std::string, double>;

double log_eval(const ExponentVector& e, const Point& logs) {
  double s = 0;
  for (const auto& [sym, x] : e.entries()) s += x.to_double() * logs.at(sym);
  return s;
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3, 3);
  Point p;
  for (const char* s : {"lambda", "delta", "rho", "mass", "mass_rho", "mass_ratio", "mu", "mu_tilde", "mu_rho", "A", "m",
                        "D", "h", "R", "volume", "volume_rho", "normalized_integral"}) {
    p[s] = u(rng);
  }
  return p;
}

Rational random_rational(std::mt19937_64& rng, long span = 40, long den = 12) {
  std::uniform_int_distribution<long> n(-span, span), d(1, den);
  return Rational(n(rng), d(rng));
}

ExponentVector random_vector(std::mt19937_64& rng, std::initializer_list<const char*> symbols) {
  ExponentVector e;
  std::bernoulli_distribution keep(0.7);
  for (const char* s : symbols) {
    if (keep(rng)) e.set(s, random_rational(rng));
  }
  return e;
}

Bound upper(const std::string& q, ExponentVector rhs, Loss loss = Loss::Sharp) {
  Bound b;
  b.quantity = q;
  b.relation = Relation::UpperApprox;
  b.rhs = std::move(rhs);
  b.loss = loss;
  return b;
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("1e-9"), Rational(1, 1000000000));
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  // leading zeros are decimal, not octal
  EXPECT_EQ(Rational::parse("0.0625"), Rational(1, 16));
  EXPECT_EQ(Rational::parse("010/08"), Rational(5, 4));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(Rational(10, -4).str(), "-5/2");
  EXPECT_EQ(Rational(702, 251).decimal(10), "2.7968127490");
  EXPECT_EQ(Rational(-1, 3).decimal(3), "-0.333");
  EXPECT_EQ(Rational(1, 2).decimal(0), "1");
}

TEST(Rational, RoundingToBitGridBracketsValue) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng, 100000, 99991);
    const Rational up = x.round_up_to_bits(20), down = x.round_down_to_bits(20);
    EXPECT_LE(down, x);
    EXPECT_GE(up, x);
    EXPECT_LE(up - down, Rational(1, 1 << 20));
  }
}

TEST(Rational, FloorCeilMatchIntegerDivision) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(6, 2).ceil(), 3);
}

TEST(ExponentVector, DropsZeroEntries) {
  ExponentVector e{{"lambda", Rational(1, 2)}, {"delta", Rational(0)}};
  EXPECT_FALSE(e.contains("delta"));
  e += ExponentVector{{"lambda", Rational(-1, 2)}};
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(e.str(), "1");
}

TEST(BoundText, RoundTrips) {
  const Bound b = parse_bound("mu <=~ delta^-49/50 * lambda^-101/100 * mass^1/10 ~eps");
  EXPECT_EQ(b.quantity, "mu");
  EXPECT_EQ(b.loss, Loss::EpsPower);
  EXPECT_EQ(b.rhs.get("lambda"), Rational(-101, 100));
  EXPECT_EQ(to_text(b), "mu <=~ delta^-49/50 * lambda^-101/100 * mass^1/10 ~eps");
  const Bound l = parse_bound("volume >=~ 1");
  EXPECT_EQ(l.relation, Relation::LowerApprox);
  EXPECT_TRUE(l.rhs.empty());
  EXPECT_EQ(to_text(l), "volume >=~ 1");
  EXPECT_THROW(parse_bound("mu << delta"), CalculusError);
}

TEST(BoundJson, RoundTrips) {
  const Bound b = parse_bound("mu_rho <=~ A^3/8 * D^1 * lambda^-7/16 ~log");
  const nlohmann::json j = b;
  EXPECT_EQ(j.get<Bound>(), b);
}

TEST(Interpolate, MatchesLogSpaceOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Bound b1 = upper("mu", random_vector(rng, {"lambda", "delta", "rho", "mass"}), Loss::PolyLog);
    const Bound b2 = upper("mu", random_vector(rng, {"lambda", "delta", "A", "mass"}));
    std::uniform_int_distribution<long> k(0, 12);
    const Rational t(k(rng), 12);
    const Bound r = interpolate(b1, b2, t);
    const Point p = random_point(rng);
    const double expected = t.to_double() * log_eval(b1.rhs, p) + (1 - t.to_double()) * log_eval(b2.rhs, p);
    EXPECT_NEAR(log_eval(r.rhs, p), expected, 1e-9);
    EXPECT_EQ(r.loss, Loss::PolyLog);
    EXPECT_EQ(r.relation, Relation::UpperApprox);
  }
}

TEST(Interpolate, RejectsMismatchedStatementsAndBadWeights) {
  const Bound a = upper("mu", {{"lambda", Rational(-1)}});
  Bound b = upper("volume", {{"lambda", Rational(1)}});
  EXPECT_THROW(interpolate(a, b, Rational(1, 2)), CalculusError);
  b.quantity = "mu";
  b.relation = Relation::LowerApprox;
  EXPECT_THROW(interpolate(a, b, Rational(1, 2)), CalculusError);
  try {
    interpolate(a, a, Rational(3, 2));
    FAIL();
  } catch (const CalculusError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WeightOutOfRange);
  }
}

TEST(SolveWeight, HitsTargetExactly) {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Bound b1 = upper("mu", random_vector(rng, {"lambda", "rho"}));
    const Bound b2 = upper("mu", random_vector(rng, {"lambda", "rho"}));
    const Rational target = random_rational(rng, 10, 4);
    try {
      const Rational t = solve_weight(b1, b2, "rho", target);
      EXPECT_GE(t, Rational(0));
      EXPECT_LE(t, Rational(1));
      EXPECT_EQ(interpolate(b1, b2, t).rhs.get("rho"), target);
      ++solved;
    } catch (const CalculusError& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::WeightOutOfRange || e.kind() == ErrorKind::NoSolution);
    }
  }
  EXPECT_GT(solved, 10);
}

TEST(SolveWeight, EqualExponents) {
  const Bound b = upper("mu", {{"rho", Rational(1, 3)}});
  EXPECT_EQ(solve_weight(b, b, "rho", Rational(1, 3)), Rational(0));
  try {
    solve_weight(b, b, "rho", Rational(1));
    FAIL();
  } catch (const CalculusError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(Eliminate, RemovesSymbol) {
  // rho exponents 2/23 and -1: weight 23/25 on the first
  const Bound b1 = upper("mu", {{"rho", Rational(2, 23)}, {"lambda", Rational(-83, 92)}});
  const Bound b2 = upper("mu", {{"rho", Rational(-1)}, {"lambda", Rational(-9, 4)}});
  const auto [t, r] = eliminate(b1, b2, "rho");
  EXPECT_EQ(t, Rational(23, 25));
  EXPECT_FALSE(r.rhs.contains("rho"));
}

TEST(Compose, MatchesLogSpaceOracleWhenSound) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    ExponentVector outer_rhs = random_vector(rng, {"lambda", "delta"});
    Rational e = random_rational(rng, 6, 5);
    if (e.is_zero()) e = Rational(1, 2);
    outer_rhs.set("mu_tilde", e);
    const Bound outer = upper("mu", outer_rhs);
    Bound inner = upper("mu_tilde", random_vector(rng, {"lambda", "rho", "mass"}));
    if (e.sign() < 0) inner.relation = Relation::LowerApprox;
    const Bound r = compose(outer, inner);
    EXPECT_FALSE(r.rhs.contains("mu_tilde"));
    const Point p = random_point(rng);
    ExponentVector rest = outer_rhs;
    rest.erase("mu_tilde");
    EXPECT_NEAR(log_eval(r.rhs, p), log_eval(rest, p) + e.to_double() * log_eval(inner.rhs, p), 1e-9);
    // the unsound direction is refused
    Bound flipped = inner;
    flipped.relation = opposite(inner.relation);
    try {
      compose(outer, flipped);
      ADD_FAILURE() << "unsound composition accepted";
    } catch (const CalculusError& err) {
      EXPECT_EQ(err.kind(), ErrorKind::DirectionUnsound);
    }
  }
}

TEST(Compose, ZeroExponentIsNoOpWithStep) {
  const Bound outer = upper("mu", {{"lambda", Rational(-1)}});
  const Bound inner = upper("mu_tilde", {{"rho", Rational(1)}});
  const Bound r = compose(outer, inner, "unused");
  EXPECT_TRUE(r.same_statement(outer));
  ASSERT_FALSE(r.provenance.empty());
  EXPECT_EQ(r.provenance.back(), "unused");
}

TEST(SubstituteRescale, MatchesLogSpaceOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Bound b = upper("mu", random_vector(rng, {"lambda", "delta", "mass"}));
    const ExponentVector repl = random_vector(rng, {"delta", "rho"});
    const Bound r = substitute_rescale(b, "delta", repl);
    Point p = random_point(rng);
    Point q = p;
    q["delta"] = log_eval(repl, p);
    EXPECT_NEAR(log_eval(r.rhs, p), log_eval(b.rhs, q), 1e-9);
  }
}

TEST(DropBounded, RespectsDomains) {
  // A >= 1: dropping A^-1/2 from an upper bound is sound, A^1/2 is not
  const Bound ok = upper("mu", {{"A", Rational(-1, 2)}, {"lambda", Rational(-1)}});
  EXPECT_FALSE(drop_bounded(ok, "A").rhs.contains("A"));
  const Bound bad = upper("mu", {{"A", Rational(1, 2)}});
  EXPECT_THROW(drop_bounded(bad, "A"), CalculusError);
  // lambda <= 1: lambda^1 can be dropped from an upper bound
  EXPECT_FALSE(drop_bounded(upper("mu", {{"lambda", Rational(1)}}), "lambda").rhs.contains("lambda"));
  // free symbols are never droppable
  EXPECT_THROW(drop_bounded(upper("volume", {{"mu", Rational(1)}}), "mu"), CalculusError);
}

TEST(DoubleCount, IsAnInvolution) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Bound v;
    v.quantity = "volume";
    v.relation = Relation::LowerApprox;
    v.rhs = random_vector(rng, {"lambda", "delta", "rho", "mass"});
    const Bound mu = double_count(v);
    EXPECT_EQ(mu.quantity, "mu");
    EXPECT_EQ(mu.relation, Relation::UpperApprox);
    // volume * mu = lambda * mass
    const Point p = random_point(rng);
    EXPECT_NEAR(log_eval(v.rhs, p) + log_eval(mu.rhs, p), p.at("lambda") + p.at("mass"), 1e-9);
    EXPECT_TRUE(double_count(mu).same_statement(v));
  }
}

TEST(DoubleCount, RhoFrame) {
  const Bound v = parse_bound("volume_rho >=~ lambda^1 * mass_rho^1/2");
  const Bound mu = double_count(v, DoubleCountFrame::rho_scale());
  EXPECT_EQ(to_text(mu), "mu_rho <=~ mass_rho^1/2");
}

TEST(Weaken, OnlyLoosens) {
  const Bound b = upper("mu", {{"lambda", Rational(-1)}});
  // delta <= 1, so delta^-1 >= 1 loosens an upper bound
  const Bound w = weaken(b, {{"delta", Rational(-1)}}, Loss::EpsPower);
  EXPECT_EQ(w.rhs.get("delta"), Rational(-1));
  EXPECT_EQ(w.loss, Loss::EpsPower);
  EXPECT_THROW(weaken(b, {{"delta", Rational(1)}}, Loss::Sharp), CalculusError);
}

TEST(Provenance, AccumulatesWithoutDuplicates) {
  Bound a = upper("mu", {{"lambda", Rational(-1)}});
  a.provenance = {"x"};
  Bound b = upper("mu", {{"lambda", Rational(-2)}});
  b.provenance = {"x", "y"};
  const Bound r = interpolate(a, b, Rational(1, 2), "z");
  EXPECT_EQ(r.provenance, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Symbols, UnknownSymbolIsReported) {
  try {
    substitute_rescale(upper("mu", {{"nope", Rational(1)}}), "nope", {});
    FAIL();
  } catch (const CalculusError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSymbol);
  }
}

}  // namespace
}  // namespace tubenum
