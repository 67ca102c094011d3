#include <gtest/gtest.h>

#include <map>

#include "tubenum/derive/incidence.hpp"
#include "tubenum/derive/registry.hpp"
#include "tubenum/derive/restriction.hpp"
#include "tubenum/derive/self_improve.hpp"

namespace tubenum {
namespace {

// Exponent vectors as plain maps, combined with hand-written arithmetic so the
// chains below do not go through the calculus operations they check.
using Exps = std::map<std::string, Rational>;

Exps clean(Exps e) {
  std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
  return e;
}

Exps mix(const Exps& x, const Rational& t, const Exps& y) {
  Exps out;
  for (const auto& [s, e] : x) out[s] += t * e;
  for (const auto& [s, e] : y) out[s] += (Rational(1) - t) * e;
  return clean(out);
}

Exps plus(Exps x, const Exps& y, const Rational& scale = Rational(1)) {
  for (const auto& [s, e] : y) x[s] += scale * e;
  return clean(x);
}

// Replace sym^e by (replacement)^e.
Exps subst(Exps x, const std::string& sym, const Exps& replacement) {
  const Rational e = x[sym];
  x.erase(sym);
  return plus(x, replacement, e);
}

// mu * volume ~ lambda * mass.
Exps flip(const Exps& x) { return plus({{"lambda", Rational(1)}, {"mass", Rational(1)}}, x, Rational(-1)); }

Exps as_map(const ExponentVector& v) {
  Exps out;
  for (const auto& [s, e] : v.entries()) out[s] = e;
  return out;
}

struct IncidenceOracle {
  Exps multiplicity;
  Exps volume_m;
  Rational rho_weight;
};

IncidenceOracle incidence_oracle() {
  const Exps hairbrush{{"m", Rational(1, 2)}, {"lambda", Rational(-3, 4)}, {"delta", Rational(-1)},
                       {"mass", Rational(1, 2)}};
  const Exps planebrush = flip({{"lambda", Rational(4, 3)}, {"rho", Rational(2, 3)}, {"D", Rational(-4, 3)},
                                {"A", Rational(-1, 3)}, {"mass", Rational(1)}});
  const Exps trilinear =
      flip({{"lambda", Rational(13, 4)}, {"delta", Rational(3, 4)}, {"rho", Rational(1)}, {"mass", Rational(1, 4)}});

  // Coarse scale: hairbrush at delta = rho, m = A, mass = mass_rho.
  Exps coarse_hb = subst(subst(hairbrush, "delta", {{"rho", Rational(1)}}), "m", {{"A", Rational(1)}});
  coarse_hb = subst(coarse_hb, "mass", {{"mass_rho", Rational(1)}});
  Exps coarse_pb = subst(planebrush, "mass", {{"mass_rho", Rational(1)}});
  const Exps coarse = mix(coarse_pb, Rational(3, 4), coarse_hb);
  // mu <= mu_rho mu_tilde / D.
  const Exps product = plus(coarse, {{"D", Rational(-1)}});

  // Fine scale: one-parallel, delta -> delta / rho, mass -> mass_ratio.
  Exps fine = subst(hairbrush, "m", {});
  fine = subst(fine, "delta", {{"delta", Rational(1)}, {"rho", Rational(-1)}});
  fine = subst(fine, "mass", {{"mass_ratio", Rational(1)}});

  // mass_ratio <= A^-1 is used for a positive mass_ratio exponent.
  auto remove_ratio = [](Exps x) {
    EXPECT_GT(x["mass_ratio"], Rational(0));
    return subst(x, "mass_ratio", {{"A", Rational(-1)}});
  };
  Exps route1 = plus(product, fine);
  route1 = subst(route1, "mass_rho", {{"mass", Rational(1)}, {"mass_ratio", Rational(-1)}});
  route1 = remove_ratio(route1);
  const Exps route2 = remove_ratio(plus({{"rho", Rational(-1)}}, fine));

  Exps combined = mix(route1, Rational(8, 23), route2);
  EXPECT_LT(combined["A"], Rational(0));
  combined.erase("A");

  // Weight t on `combined` that cancels rho against the trilinear bound.
  const Rational t = -trilinear.at("rho") / (combined.at("rho") - trilinear.at("rho"));
  IncidenceOracle out;
  out.multiplicity = mix(combined, t, trilinear);
  out.volume_m = subst(flip(out.multiplicity), "mass", {{"mass", Rational(1)}, {"m", Rational(-1)}});
  out.rho_weight = t;
  return out;
}

TEST(Incidence, MatchesIndependentChain) {
  const IncidenceResult r = derive_lemma_incidence();
  const IncidenceOracle o = incidence_oracle();
  EXPECT_EQ(as_map(r.multiplicity.rhs), o.multiplicity);
  EXPECT_EQ(as_map(r.volume_m_parallel.rhs), o.volume_m);
  EXPECT_EQ(r.rho_weight, o.rho_weight);
  EXPECT_EQ(r.multiplicity.relation, Relation::UpperApprox);
  EXPECT_EQ(r.volume.relation, Relation::LowerApprox);
}

TEST(Incidence, PublishedExponents) {
  const IncidenceResult r = derive_lemma_incidence();
  const Exps mu{{"lambda", Rational(-101, 100)}, {"delta", Rational(-49, 50)}, {"mass", Rational(1, 10)}};
  EXPECT_EQ(as_map(r.multiplicity.rhs), mu);
  const Exps vol{{"m", Rational(-9, 10)},
                 {"lambda", Rational(201, 100)},
                 {"delta", Rational(49, 50)},
                 {"mass", Rational(9, 10)}};
  EXPECT_EQ(as_map(r.volume_m_parallel.rhs), vol);
  EXPECT_EQ(r.combination_weight, Rational(8, 23));
  EXPECT_EQ(r.rho_weight, Rational(23, 25));
}

TEST(Incidence, TraceReplaysAndRoundTrips) {
  const IncidenceResult r = derive_lemma_incidence();
  const auto axioms = base_bounds(Regime::FixedEps).bounds();
  const ReplayReport rep = replay(r.trace, axioms);
  EXPECT_TRUE(rep.ok) << rep.mismatch;
  EXPECT_EQ(rep.steps_checked, r.trace.steps.size());

  const nlohmann::json j = r.trace;
  const Derivation back = j.get<Derivation>();
  EXPECT_EQ(nlohmann::json(back).dump(), j.dump());
  EXPECT_TRUE(replay(back, axioms).ok);
}

TEST(Incidence, ReplayDetectsTamperedStep) {
  Derivation d = derive_lemma_incidence().trace;
  Step& s = d.steps.at(d.steps.size() / 2);
  const std::string id = s.id;
  ExponentVector rhs = s.output.rhs;
  rhs.set("lambda", rhs.get("lambda") + Rational(1, 1000));
  s.output.rhs = rhs;
  const ReplayReport rep = replay(d, base_bounds(Regime::FixedEps).bounds());
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.mismatch.find(id), std::string::npos) << rep.mismatch;
}

TEST(Incidence, CheckpointMismatchNamesStep) {
  DerivationBuilder b("bad", base_bounds().bounds());
  b.substitute("x", kHairbrush, "m", {}, Anchor::plumbing());
  try {
    b.checkpoint("x", {{"lambda", Rational(-1, 2)}, {"delta", Rational(-1)}, {"mass", Rational(1, 2)}});
    FAIL() << "expected a mismatch";
  } catch (const DerivationMismatch& e) {
    EXPECT_EQ(e.step(), "x");
    EXPECT_EQ(e.symbol(), "lambda");
    EXPECT_EQ(e.actual(), Rational(-3, 4));
  }
}

TEST(Incidence, CombinationIsOptimal) {
  const IncidenceLp lp = incidence_lp_certificate(derive_lemma_incidence());
  ASSERT_TRUE(lp.best.solution.feasible);
  EXPECT_EQ(lp.replayed_delta_exponent, Rational(-49, 50));
  EXPECT_TRUE(lp.replayed_is_optimal);
}

TEST(Incidence, TrilinearVolumeFormReproducesAxiom) {
  const TrilinearReplay t = derive_trilinear_corollary();
  EXPECT_TRUE(t.matches_axiom);
  EXPECT_EQ(as_map(t.converted.rhs),
            flip({{"lambda", Rational(13, 4)}, {"delta", Rational(3, 4)}, {"rho", Rational(1)},
                  {"mass", Rational(1, 4)}}));
}

TEST(Lp, VertexEnumerationSolvesSmallProgram) {
  // max x + y subject to x + 2y <= 4, 3x + y <= 6, x, y >= 0: optimum (8/5, 6/5).
  using K = LinearConstraint::Kind;
  const std::vector<LinearConstraint> cons{
      {{Rational(1), Rational(2)}, Rational(4), K::AtMost},
      {{Rational(3), Rational(1)}, Rational(6), K::AtMost},
      {{Rational(1), Rational(0)}, Rational(0), K::AtLeast},
      {{Rational(0), Rational(1)}, Rational(0), K::AtLeast},
  };
  const LpSolution s = maximize_over_polytope({Rational(1), Rational(1)}, cons);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.value, Rational(14, 5));
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
}

TEST(Restriction, MatchesIndependentInterpolation) {
  const RestrictionResult r = derive_restriction_exponent();

  // High endpoint by hand: mu^2/3 m^-2/3 R^-1 with lambda -> lambda h,
  // delta -> R^-1/2, mass <= m, then h dropped.
  Exps mu = flip(incidence_oracle().volume_m);
  mu = subst(mu, "lambda", {{"lambda", Rational(1)}, {"h", Rational(1)}});
  mu = subst(mu, "delta", {{"R", Rational(-1, 2)}});
  Exps high = plus({{"m", Rational(-2, 3)}, {"R", Rational(-1)}}, mu, Rational(2, 3));
  high = subst(high, "mass", {{"m", Rational(1)}});
  EXPECT_LE(high["m"], Rational(0));
  EXPECT_LE(high["h"], Rational(0));
  high.erase("m");
  high.erase("h");
  EXPECT_EQ(as_map(r.endpoint_high.rhs), high);

  // Weight on the L^2 endpoint lambda R that zeroes the R exponent.
  const Rational theta = -high.at("R") / (Rational(1) - high.at("R"));
  EXPECT_EQ(r.theta, theta);
  EXPECT_EQ(r.p, Rational(2) * theta + Rational(10, 3) * (Rational(1) - theta));
}

TEST(Restriction, PublishedExponent) {
  const RestrictionResult r = derive_restriction_exponent();
  EXPECT_EQ(r.theta, Rational(101, 251));
  EXPECT_EQ(r.p, Rational(702, 251));
  EXPECT_EQ(r.p, Rational(2) + Rational(200, 251));
  EXPECT_EQ(r.theta_low, r.theta_high);
  EXPECT_EQ(r.binding_symbol, "R");
  EXPECT_TRUE(replay(r.trace, {}).ok);
}

TEST(Restriction, HairbrushFixtureRuns) {
  const RestrictionResult r = derive_restriction_hairbrush_fixture();
  EXPECT_LE(r.theta_low, r.theta);
  EXPECT_LE(r.theta, r.theta_high);
  EXPECT_EQ(r.p, Rational(2) * r.theta + Rational(10, 3) * (Rational(1) - r.theta));
}

TEST(SelfImprove, OneStepFromUnitExponent) {
  const SelfImproveResult r = derive_self_improve(Rational(1), Rational(65, 28));
  // Closed forms evaluated by hand at alpha = 1.
  const Rational a(1);
  const Rational prime = Rational(1) - (Rational(18) - Rational(17) * a) * (Rational(3) - Rational(2) * a) /
                                           (Rational(54) * (Rational(2) - a));
  const Rational dprime = Rational(45, 28) - Rational(9, 14) / a;
  EXPECT_EQ(r.alpha_prime, prime);
  EXPECT_EQ(r.alpha_double_prime, dprime);
  EXPECT_EQ(r.alpha_prime, Rational(53, 54));
  EXPECT_EQ(r.alpha_double_prime, Rational(27, 28));
  EXPECT_TRUE(r.flags.valid());

  ASSERT_TRUE(r.te_prime.has_value());
  EXPECT_EQ(r.te_prime->d, QuadraticNumber(Rational(163, 54)));
  EXPECT_EQ(r.te_prime->a, QuadraticNumber(Rational(65, 28)));
  EXPECT_EQ(r.te_prime->b, QuadraticNumber(Rational(2, 3)));
  ASSERT_TRUE(r.te_double_prime.has_value());
  EXPECT_EQ(r.te_double_prime->d, QuadraticNumber(Rational(85, 28)));
  EXPECT_EQ(r.te_double_prime->a, QuadraticNumber(Rational(85, 28)));
  EXPECT_EQ(r.te_double_prime->b, QuadraticNumber(Rational(1)));
  // The step is stated for every eps at once, so its axioms carry polylog losses.
  EXPECT_TRUE(replay(r.trace, base_bounds(Regime::AnyEps).bounds()).ok);
  EXPECT_FALSE(replay(r.trace, base_bounds(Regime::FixedEps).bounds()).ok);
}

TEST(SelfImprove, FlagsRejectOutOfWindowInputs) {
  EXPECT_FALSE(derive_self_improve(Rational(9, 10), Rational(65, 28)).flags.alpha_in_window);
  const SelfImproveResult wide = derive_self_improve(Rational(1), Rational(3));
  EXPECT_FALSE(wide.flags.beta_in_window);
  EXPECT_FALSE(wide.flags.condition_i);
  EXPECT_FALSE(wide.flags.valid());
}

TEST(SelfImprove, ConditionsMatchDirectEvaluation) {
  for (int i = 0; i <= 40; ++i) {
    const Rational a = Rational(97, 100) + Rational(i, 1000);
    for (const Rational& b : {Rational(131, 60), Rational(65, 28), Rational(65, 24)}) {
      const Rational c1 = Rational(96) - Rational(31) * a - Rational(24) * b;
      const Rational c2 = Rational(196) * a * a - (Rational(417) + Rational(12) * b) * a + Rational(72) * b + 90;
      EXPECT_EQ(condition_i(QuadraticNumber(a), b), QuadraticNumber(c1));
      EXPECT_EQ(condition_ii(QuadraticNumber(a), b), QuadraticNumber(c2));
    }
  }
}

TEST(SelfImprove, BetaWindowOnIteratedInterval) {
  const BetaWindowReport w = check_beta_window(alpha_star(), QuadraticNumber(1), Rational(65, 28));
  EXPECT_TRUE(w.holds());
  // Sampled minima cannot undercut the exact minima.
  for (int i = 0; i <= 200; ++i) {
    const QuadraticNumber a = alpha_star() + (QuadraticNumber(1) - alpha_star()) * QuadraticNumber(Rational(i, 200));
    EXPECT_GE(condition_i(a, Rational(65, 28)), w.min_condition_i);
    EXPECT_GE(condition_ii(a, Rational(65, 28)), w.min_condition_ii);
  }
  EXPECT_LE(w.beta_min, QuadraticNumber(Rational(65, 28)));
  EXPECT_GE(w.beta_max, QuadraticNumber(Rational(65, 28)));
  EXPECT_FALSE(check_beta_window(alpha_star(), QuadraticNumber(1), Rational(3)).holds());
}

TEST(SelfImprove, IterationReachesFixedPoint) {
  const KakeyaIteration it = iterate_self_improvement(Rational(1, 1000000000));
  EXPECT_EQ(it.K, 18);
  EXPECT_EQ(it.trajectory.front(), Rational(1));
  EXPECT_EQ(it.trajectory.back(), it.alpha_K);
  EXPECT_GT(QuadraticNumber(it.alpha_K), alpha_star());
  EXPECT_LT(QuadraticNumber(it.alpha_K), alpha_star() + QuadraticNumber(Rational(1, 1000000000)));
  EXPECT_TRUE(it.strictly_decreasing);
  EXPECT_TRUE(it.trajectory_window_ok);
}

}  // namespace
}  // namespace tubenum
