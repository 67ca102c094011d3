#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubenum/algebra/iterate.hpp"
#include "tubenum/algebra/quadratic.hpp"
#include "tubenum/algebra/rational_map.hpp"
#include "tubenum/derive/derivation.hpp"

namespace tubenum {

/// Parameters of the volume estimate |union Y(T)| >=~ lambda^a delta^(4-d) mass^b.
/// `slack` is the epsilon loss in d, kept apart so d stays exact.
struct TEStatement {
  QuadraticNumber d;
  QuadraticNumber a;
  QuadraticNumber b;
  Rational slack;
  bool slack_in_a = false;  // the same slack is also subtracted from a

  TEStatement(QuadraticNumber d, QuadraticNumber a, QuadraticNumber b, Rational slack = Rational(0));
  std::string str() const;
};

// Closed forms of the self-improvement step.
RationalMap alpha_prime_map();         // 1 - (18-17a)(3-2a)/(54(2-a))
RationalMap alpha_double_prime_map();  // 45/28 - 9/(14a)
Rational lambda_exponent_prime(const Rational& alpha, const Rational& beta);
Rational lambda_exponent_double_prime(const Rational& alpha, const Rational& beta);
Rational two_ends_weight(const Rational& alpha);  // 14a(3-2a)/(27(2-a))

/// (75 - 3 sqrt(145))/40, the fixed point of alpha_prime_map in (0, 1].
const QuadraticNumber& alpha_star();
/// 4 - alpha''(alpha*) = (159 + sqrt(145))/56.
const QuadraticNumber& kakeya_d0();

/// Cleared-denominator forms of the two lambda-power conditions.
/// (i)  96 - 31a - 24b >= 0
/// (ii) 196a^2 - (417 + 12b)a + 72b + 90 >= 0
QuadraticNumber condition_i(const QuadraticNumber& alpha, const Rational& beta);
QuadraticNumber condition_ii(const QuadraticNumber& alpha, const Rational& beta);

struct SelfImproveFlags {
  bool alpha_in_window = false;  // alpha* <= alpha <= 1
  bool beta_in_window = false;   // 131/60 <= beta <= 65/24
  bool condition_i = false;
  bool condition_ii = false;
  bool mass_exponent_nonnegative = false;
  bool improves = false;         // alpha' < alpha
  bool valid() const {
    return alpha_in_window && beta_in_window && condition_i && condition_ii && mass_exponent_nonnegative && improves;
  }
};

struct SelfImproveResult {
  Rational alpha;
  Rational beta;
  Rational alpha_prime;
  Rational alpha_double_prime;
  Rational lambda_prime;         // lambda exponent of the alpha' bound
  Rational lambda_double_prime;  // lambda exponent of the alpha'' bound
  Rational mass_prime;
  Rational mass_double_prime;
  Rational planar_weight;        // 2 alpha / 3
  Rational rho_weight;           // 6 / (7 alpha)
  Rational two_ends_weight;
  Bound alpha_prime_bound;
  Bound alpha_double_prime_bound;
  std::optional<TEStatement> te_prime;         // TE(4-alpha', beta, 1-alpha/3)
  std::optional<TEStatement> te_double_prime;  // TE(4-alpha'', 4-alpha'', 1)
  SelfImproveFlags flags;
  Derivation trace;
};

/// Bound-level replay of one self-improvement step from TE(4-alpha, beta,
/// 1-alpha/3). Requires 0 < alpha <= 1 and beta > 0. Weights outside [0,1]
/// throw; failed conditions are reported in `flags`.
SelfImproveResult derive_self_improve(const Rational& alpha, const Rational& beta);

struct BetaWindowReport {
  QuadraticNumber alpha_low;
  QuadraticNumber alpha_high;
  Rational beta;
  bool condition_i = false;
  bool condition_ii = false;
  QuadraticNumber min_condition_i;   // minimum of the cleared polynomial
  QuadraticNumber min_condition_ii;
  QuadraticNumber witness_i;         // where the minimum is attained
  QuadraticNumber witness_ii;
  QuadraticNumber beta_max;          // largest beta with (i) on the interval
  QuadraticNumber beta_min;          // smallest beta with (ii) on the interval
  bool beta_min_monotone = false;    // beta_min(alpha) increasing on the interval
  bool holds() const { return condition_i && condition_ii; }
};

BetaWindowReport check_beta_window(const QuadraticNumber& alpha_low, const QuadraticNumber& alpha_high,
                                   const Rational& beta);

struct KakeyaIteration {
  Rational beta;
  Rational eps;
  int K = 0;                       // number of iterates, alpha_1 .. alpha_K
  Rational alpha_K;
  std::vector<Rational> trajectory;
  bool strictly_decreasing = true;
  bool above_fixed_point = true;   // every iterate > alpha*
  int rounded_steps = 0;
  bool trajectory_window_ok = true;  // both conditions at every iterate
  BetaWindowReport interval_window;
  std::vector<TEStatement> te_statements;
  Derivation seed;
};

/// Iterates alpha -> alpha' from alpha_1 = 1 with beta = 65/28 until
/// alpha_K < alpha* + eps. Aborts with std::runtime_error naming the step if a
/// validity flag fails.
KakeyaIteration iterate_self_improvement(const Rational& eps, unsigned round_bits = 256);

}  // namespace tubenum
