#include "tubenum/derive/self_improve.hpp"

#include <stdexcept>

#include "tubenum/calculus/error.hpp"
#include "tubenum/derive/incidence.hpp"
#include "tubenum/derive/registry.hpp"

namespace tubenum {

namespace {

Anchor step_anchor(std::string note) { return {"self-improvement step", std::move(note)}; }

const Rational kBetaLow(131, 60);
const Rational kBetaHigh(65, 24);

QuadraticNumber q(const Rational& r) { return QuadraticNumber(r); }

}  // namespace

TEStatement::TEStatement(QuadraticNumber d_, QuadraticNumber a_, QuadraticNumber b_, Rational slack_)
    : d(std::move(d_)), a(std::move(a_)), b(std::move(b_)), slack(std::move(slack_)) {
  if (d > QuadraticNumber(4) || a.sign() < 0 || b.sign() < 0) {
    throw CalculusError(ErrorKind::ContractViolation, "TE parameters out of range: " + str());
  }
}

std::string TEStatement::str() const {
  std::string out = "TE(" + d.str();
  if (!slack.is_zero()) out += " - " + slack.str();
  out += ", " + a.str();
  if (slack_in_a && !slack.is_zero()) out += " - " + slack.str();
  return out + ", " + b.str() + ")";
}

RationalMap alpha_prime_map() {
  return RationalMap(Polynomial({Rational(54), Rational(33), Rational(-34)}), Polynomial({Rational(108), Rational(-54)}));
}

RationalMap alpha_double_prime_map() {
  return RationalMap(Polynomial({Rational(-18), Rational(45)}), Polynomial({Rational(0), Rational(28)}));
}

Rational lambda_exponent_prime(const Rational& a, const Rational& b) {
  return (Rational(196) * a * a + Rational(96) * a * b - Rational(525) * a - Rational(144) * b + Rational(306)) /
         (Rational(108) * (Rational(2) - a));
}

Rational lambda_exponent_double_prime(const Rational& a, const Rational& b) {
  return Rational(-5, 2) + (Rational(1) - b) * Rational(6) / (Rational(7) * a) + Rational(27) / (Rational(14) * a);
}

Rational two_ends_weight(const Rational& a) {
  return Rational(14) * a * (Rational(3) - Rational(2) * a) / (Rational(27) * (Rational(2) - a));
}

const QuadraticNumber& alpha_star() {
  static const QuadraticNumber value = [] {
    const FixedPointReport r = alpha_prime_map().fixed_points();
    for (const auto& root : r.roots) {
      if (root.sign() > 0 && root <= QuadraticNumber(1)) return root;
    }
    throw std::logic_error("no fixed point in (0, 1]");
  }();
  return value;
}

const QuadraticNumber& kakeya_d0() {
  static const QuadraticNumber value = QuadraticNumber(4) - alpha_double_prime_map()(alpha_star());
  return value;
}

QuadraticNumber condition_i(const QuadraticNumber& a, const Rational& b) {
  return q(Rational(96) - Rational(24) * b) - q(Rational(31)) * a;
}

QuadraticNumber condition_ii(const QuadraticNumber& a, const Rational& b) {
  return q(Rational(196)) * a * a - q(Rational(417) + Rational(12) * b) * a + q(Rational(72) * b + Rational(90));
}

SelfImproveResult derive_self_improve(const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) {
    throw CalculusError(ErrorKind::ContractViolation, "alpha must lie in (0, 1], got " + alpha.str());
  }
  if (beta.sign() <= 0) throw CalculusError(ErrorKind::ContractViolation, "beta must be positive");

  const Registry reg = base_bounds(Regime::AnyEps);
  DerivationBuilder b("self-improve", reg.bounds());
  b.axiom("te_hypothesis", te_volume(Rational(4) - alpha, beta, Rational(1) - alpha / Rational(3), Loss::PolyLog),
          step_anchor("hypothesis TE(4 - alpha, beta, 1 - alpha/3)"));
  b.double_count("te_mu", "te_hypothesis", DoubleCountFrame::unit_scale(), step_anchor("volume to multiplicity"));
  b.substitute("fine_delta", "te_mu", "delta", {{"delta", Rational(1)}, {"rho", Rational(-1)}},
               step_anchor("hypothesis applied at scale delta/rho"));
  b.substitute("fine_mass", "fine_delta", "mass", {{"mass_ratio", Rational(1)}}, step_anchor("rescaled mass"));
  b.rename("fine_hypothesis", "fine_mass", "mu_tilde", step_anchor("bounds the fine multiplicity"));

  const std::string relation = add_coarse_relation(b, false);
  b.compose("via_rho", relation, "fine_hypothesis", step_anchor("fine bound in the product relation"));
  b.compose("via_planar", kCoarseFinePlanar, "fine_hypothesis", step_anchor("fine bound in the planar relation"));
  const Rational planar_weight = Rational(2) * alpha / Rational(3);
  b.interpolate("combined_raw", "via_rho", "via_planar", planar_weight, step_anchor("weights 2 alpha/3, 1 - 2 alpha/3"));
  b.substitute("combined_mass", "combined_raw", "mass_rho", {{"mass", Rational(1)}, {"mass_ratio", Rational(-1)}},
               step_anchor("mass_rho = mass / mass_ratio"));
  b.compose("combined", "combined_mass", kCountRatio, step_anchor("mass_ratio <= 1/A removes A"));
  b.checkpoint("combined", {{"lambda", Rational(1) - beta - Rational(7, 24) * alpha},
                            {"rho", Rational(-1) + Rational(7, 6) * alpha},
                            {"delta", -alpha},
                            {"mass", alpha / Rational(12)}});

  b.eliminate("alpha2_bound", "combined", kTrilinear, "rho", step_anchor("remove rho against the trilinear estimate"));
  const Rational rho_weight = b.derivation().step("alpha2_bound").params.at("t").get<Rational>();

  b.substitute("two_ends_m", kHairbrush, "m", {}, step_anchor("two-ends hairbrush bound for a 1-parallel family"));
  const Rational t = b.solve_weight("alpha2_bound", "two_ends_m", "mass", alpha / Rational(3));
  b.interpolate("alpha1_bound", "alpha2_bound", "two_ends_m", t, step_anchor("mass exponent matched to alpha/3"));

  SelfImproveResult r;
  r.alpha = alpha;
  r.beta = beta;
  r.alpha_double_prime_bound = b.get("alpha2_bound");
  r.alpha_prime_bound = b.get("alpha1_bound");
  r.alpha_double_prime = -r.alpha_double_prime_bound.rhs.get("delta");
  r.alpha_prime = -r.alpha_prime_bound.rhs.get("delta");
  r.lambda_double_prime = r.alpha_double_prime_bound.rhs.get("lambda");
  r.lambda_prime = r.alpha_prime_bound.rhs.get("lambda");
  r.mass_double_prime = r.alpha_double_prime_bound.rhs.get("mass");
  r.mass_prime = r.alpha_prime_bound.rhs.get("mass");
  r.planar_weight = planar_weight;
  r.rho_weight = rho_weight;
  r.two_ends_weight = t;

  const QuadraticNumber qa(alpha);
  r.flags.alpha_in_window = alpha_star() <= qa && alpha <= Rational(1);
  r.flags.beta_in_window = kBetaLow <= beta && beta <= kBetaHigh;
  r.flags.condition_i = condition_i(qa, beta).sign() >= 0;
  r.flags.condition_ii = condition_ii(qa, beta).sign() >= 0;
  r.flags.mass_exponent_nonnegative = r.mass_double_prime.sign() >= 0;
  r.flags.improves = r.alpha_prime < alpha;

  // Restate the two bounds as TE statements where the conditions allow it.
  if (r.flags.condition_ii) {
    b.double_count("te1_volume", "alpha1_bound", DoubleCountFrame::unit_scale(), step_anchor("back to volume"));
    const Rational gap = beta - b.get("te1_volume").rhs.get("lambda");
    b.weaken("te1", "te1_volume", {{"lambda", gap}}, Loss::Sharp, step_anchor("lambda <= 1 raises the power to beta"));
    b.checkpoint("te1", te_volume(Rational(4) - r.alpha_prime, beta, Rational(1) - alpha / Rational(3)).rhs);
    r.te_prime.emplace(q(Rational(4) - r.alpha_prime), q(beta), q(Rational(1) - alpha / Rational(3)));
  }
  if (r.flags.condition_i && r.flags.mass_exponent_nonnegative) {
    b.double_count("te2_volume", "alpha2_bound", DoubleCountFrame::unit_scale(), step_anchor("back to volume"));
    const Rational d2 = Rational(4) - r.alpha_double_prime;
    const Bound& v = b.get("te2_volume");
    b.weaken("te2", "te2_volume", {{"lambda", d2 - v.rhs.get("lambda")}, {"mass", Rational(1) - v.rhs.get("mass")}},
             Loss::Sharp, step_anchor("lambda, mass <= 1 raise the powers to (d, 1)"));
    b.checkpoint("te2", te_volume(d2, d2, Rational(1)).rhs);
    r.te_double_prime.emplace(q(d2), q(d2), q(Rational(1)));
  }

  b.result("alpha_prime", r.alpha_prime);
  b.result("alpha_double_prime", r.alpha_double_prime);
  b.result("planar_weight", planar_weight);
  b.result("rho_weight", rho_weight);
  b.result("two_ends_weight", t);
  r.trace = b.take();
  return r;
}

BetaWindowReport check_beta_window(const QuadraticNumber& lo, const QuadraticNumber& hi, const Rational& beta) {
  if (lo > hi) throw CalculusError(ErrorKind::ContractViolation, "empty alpha interval");
  if (lo < alpha_star() || hi > QuadraticNumber(1)) {
    throw CalculusError(ErrorKind::ContractViolation, "alpha interval must lie in [alpha*, 1]");
  }
  BetaWindowReport r;
  r.alpha_low = lo;
  r.alpha_high = hi;
  r.beta = beta;

  // (i) is linear in alpha.
  const QuadraticNumber p1_lo = condition_i(lo, beta);
  const QuadraticNumber p1_hi = condition_i(hi, beta);
  r.min_condition_i = p1_lo < p1_hi ? p1_lo : p1_hi;
  r.witness_i = p1_lo < p1_hi ? lo : hi;
  r.condition_i = r.min_condition_i.sign() >= 0;

  // (ii) is a convex quadratic in alpha: check both ends and the vertex.
  std::vector<QuadraticNumber> points{lo, hi};
  const QuadraticNumber vertex(Rational(417) + Rational(12) * beta);
  const QuadraticNumber v = vertex / QuadraticNumber(392);
  if (lo < v && v < hi) points.push_back(v);
  r.witness_ii = points.front();
  r.min_condition_ii = condition_ii(points.front(), beta);
  for (const auto& p : points) {
    const QuadraticNumber val = condition_ii(p, beta);
    if (val < r.min_condition_ii) {
      r.min_condition_ii = val;
      r.witness_ii = p;
    }
  }
  r.condition_ii = r.min_condition_ii.sign() >= 0;

  // beta_max(alpha) = (96 - 31 alpha)/24 decreases, so the interval bound sits at hi.
  r.beta_max = (QuadraticNumber(96) - QuadraticNumber(31) * hi) / QuadraticNumber(24);
  // beta_min(alpha) = (-196 alpha^2 + 417 alpha - 90)/(72 - 12 alpha). Its
  // derivative has numerator 2352 alpha^2 - 28224 alpha + 28944, which
  // decreases up to alpha = 6; positive at hi means positive on [lo, hi].
  auto beta_min_at = [](const QuadraticNumber& a) {
    return (QuadraticNumber(-196) * a * a + QuadraticNumber(417) * a - QuadraticNumber(90)) /
           (QuadraticNumber(72) - QuadraticNumber(12) * a);
  };
  const QuadraticNumber deriv_hi =
      QuadraticNumber(2352) * hi * hi - QuadraticNumber(28224) * hi + QuadraticNumber(28944);
  r.beta_min_monotone = deriv_hi.sign() > 0;
  if (r.beta_min_monotone) {
    r.beta_min = beta_min_at(hi);
  } else {
    const QuadraticNumber a = beta_min_at(lo);
    const QuadraticNumber b = beta_min_at(hi);
    r.beta_min = a < b ? b : a;
  }
  return r;
}

KakeyaIteration iterate_self_improvement(const Rational& eps, unsigned round_bits) {
  if (eps.sign() <= 0) throw CalculusError(ErrorKind::ContractViolation, "eps must be positive");
  KakeyaIteration out;
  out.beta = Rational(65, 28);
  out.eps = eps;

  // Seed: the hairbrush estimate gives TE(3, 2, 1/2), promoted to TE(3, 65/28, 2/3).
  const Registry reg = base_bounds(Regime::AnyEps);
  DerivationBuilder seed("kakeya-seed", reg.bounds());
  const Anchor seed_anchor{"iteration seed", "hairbrush estimate as a volume bound"};
  seed.substitute("seed_m", kHairbrush, "m", {}, seed_anchor);
  seed.double_count("seed_volume", "seed_m", DoubleCountFrame::unit_scale(), seed_anchor);
  seed.checkpoint("seed_volume", te_volume(Rational(3), Rational(7, 4), Rational(1, 2)).rhs);
  seed.weaken("te_3_2_half", "seed_volume", {{"lambda", Rational(1, 4)}}, Loss::Sharp,
              {"iteration seed", "lambda <= 1 gives TE(3, 2, 1/2)"});
  seed.checkpoint("te_3_2_half", te_volume(Rational(3), Rational(2), Rational(1, 2)).rhs);
  seed.weaken("te_alpha1", "te_3_2_half", {{"lambda", Rational(9, 28)}, {"mass", Rational(1, 6)}}, Loss::PolyLog,
              {"iteration seed", "lambda <= 1 and mass <~ 1 give TE(3, 65/28, 2/3)"});
  seed.checkpoint("te_alpha1", te_volume(Rational(3), out.beta, Rational(2, 3)).rhs);
  out.seed = seed.take();

  const QuadraticNumber& star = alpha_star();
  const RationalMap closed = alpha_prime_map();
  const QuadraticNumber target = star + QuadraticNumber(eps);
  Rational alpha(1);
  out.trajectory.push_back(alpha);
  constexpr int kMaxSteps = 10000;
  while (!(QuadraticNumber(alpha) < target)) {
    if (static_cast<int>(out.trajectory.size()) > kMaxSteps) {
      throw std::runtime_error("self-improvement iteration did not reach alpha* + eps");
    }
    const int k = static_cast<int>(out.trajectory.size());
    const SelfImproveResult step = derive_self_improve(alpha, out.beta);
    if (!step.flags.valid()) {
      throw std::runtime_error("self-improvement validity check failed at step " + std::to_string(k) +
                               " (alpha = " + alpha.decimal(12) + ")");
    }
    if (step.alpha_prime != closed(alpha)) {
      throw std::runtime_error("bound-level alpha' differs from the closed form at step " + std::to_string(k));
    }
    Rational next = step.alpha_prime;
    if (next.denominator_bits() > round_bits) {
      next = next.round_up_to_bits(round_bits);
      ++out.rounded_steps;
    }
    if (!(next < alpha)) out.strictly_decreasing = false;
    alpha = next;
    out.trajectory.push_back(alpha);
  }
  for (const auto& a : out.trajectory) {
    const QuadraticNumber qa(a);
    if (!(qa > star)) out.above_fixed_point = false;
    if (condition_i(qa, out.beta).sign() < 0 || condition_ii(qa, out.beta).sign() < 0) {
      out.trajectory_window_ok = false;
    }
  }
  out.K = static_cast<int>(out.trajectory.size());
  out.alpha_K = alpha;
  out.interval_window = check_beta_window(star, QuadraticNumber(1), out.beta);
  out.te_statements.emplace_back(QuadraticNumber(4) - star, QuadraticNumber(out.beta),
                                 QuadraticNumber(1) - star / QuadraticNumber(3), eps);
  out.te_statements.emplace_back(kakeya_d0(), kakeya_d0(), QuadraticNumber(1), eps);
  out.te_statements.back().slack_in_a = true;
  return out;
}

}  // namespace tubenum
