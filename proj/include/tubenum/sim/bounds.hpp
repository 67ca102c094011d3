#pragma once

#include <map>
#include <string>
#include <vector>

#include "tubenum/calculus/exponent_vector.hpp"
#include "tubenum/sim/stats.hpp"

namespace tubenum {

struct MarginReport {
  std::string label;
  double log_volume = 0;
  double log_bound = 0;
  double margin = 0;  // log_volume - log_bound
  double budget = 0;  // eps log(1/delta) + log C
  bool within_budget = false;
};

/// Margin of the observed volume over volume >= lambda^a delta^(4-d) mass^b.
/// Requires a dim-4 family.
MarginReport verify_te_bound(const IncidenceStats& stats, double d, double a, double b, double eps = 0,
                             double log_c = 0, const std::string& label = "");

/// Margin over a lower bound volume >= prod s^e, with symbol values taken from
/// the stats (lambda, delta, mass, mu) and from `extra` (e.g. m).
MarginReport verify_volume_bound(const IncidenceStats& stats, const ExponentVector& rhs,
                                 const std::map<std::string, double>& extra, double eps = 0, double log_c = 0,
                                 const std::string& label = "");

struct ScalingRow {
  int N = 0;
  double delta = 0;
  std::uint64_t tubes = 0;
  double lambda = 0;
  double mu = 0;
  double volume = 0;
  double mass = 0;
  std::vector<MarginReport> margins;
};

struct ScalingFit {
  bool degenerate = false;
  double slope = 0;      // d log volume / d log delta
  double intercept = 0;
  double d_hat = 0;      // dim - slope
  double r_squared = 0;
};

ScalingFit fit_scaling(const std::vector<ScalingRow>& rows, int dim);

}  // namespace tubenum
