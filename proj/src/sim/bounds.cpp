#include "tubenum/sim/bounds.hpp"

#include <cmath>

#include "tubenum/sim/error.hpp"

namespace tubenum {

namespace {

double log_of(const Rational& r) {
  // ratios here have small numerators and denominators
  return std::log(r.numerator().get_d()) - std::log(r.denominator().get_d());
}

MarginReport finish(MarginReport m, double delta, double eps, double log_c) {
  m.margin = m.log_volume - m.log_bound;
  m.budget = eps * std::log(1 / delta) + log_c;
  m.within_budget = m.margin >= -m.budget;
  return m;
}

}  // namespace

MarginReport verify_te_bound(const IncidenceStats& stats, double d, double a, double b, double eps, double log_c,
                             const std::string& label) {
  if (stats.dim != 4) throw SimError(SimErrorKind::InvalidConfig, "volume bounds are stated for dim 4 families");
  if (stats.shaded_cells == 0) throw SimError(SimErrorKind::InvalidConfig, "empty family");
  const double delta = 1.0 / stats.N;
  MarginReport m;
  m.label = label;
  m.log_volume = log_of(stats.volume);
  m.log_bound = a * log_of(stats.lambda) + (4 - d) * std::log(delta) + b * log_of(stats.mass);
  return finish(m, delta, eps, log_c);
}

MarginReport verify_volume_bound(const IncidenceStats& stats, const ExponentVector& rhs,
                                 const std::map<std::string, double>& extra, double eps, double log_c,
                                 const std::string& label) {
  if (stats.dim != 4) throw SimError(SimErrorKind::InvalidConfig, "volume bounds are stated for dim 4 families");
  if (stats.shaded_cells == 0) throw SimError(SimErrorKind::InvalidConfig, "empty family");
  const double delta = 1.0 / stats.N;
  std::map<std::string, double> logs = {{"lambda", log_of(stats.lambda)},
                                        {"delta", std::log(delta)},
                                        {"mass", log_of(stats.mass)},
                                        {"mu", log_of(stats.mu)}};
  for (const auto& [k, v] : extra) logs[k] = std::log(v);
  MarginReport m;
  m.label = label;
  m.log_volume = log_of(stats.volume);
  for (const auto& [sym, e] : rhs.entries()) {
    const auto it = logs.find(sym);
    if (it == logs.end()) {
      throw SimError(SimErrorKind::InvalidConfig, "no value for symbol '" + sym + "' in a simulated family");
    }
    m.log_bound += e.to_double() * it->second;
  }
  return finish(m, delta, eps, log_c);
}

ScalingFit fit_scaling(const std::vector<ScalingRow>& rows, int dim) {
  ScalingFit f;
  const double n = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& r : rows) {
    const double x = std::log(r.delta), y = std::log(r.volume);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double vx = sxx - sx * sx / n;
  if (rows.size() < 2 || !(vx > 1e-12)) {
    f.degenerate = true;
    return f;
  }
  f.slope = (sxy - sx * sy / n) / vx;
  f.intercept = (sy - f.slope * sx) / n;
  f.d_hat = dim - f.slope;
  const double vy = syy - sy * sy / n;
  f.r_squared = vy > 1e-15 ? (f.slope * f.slope * vx) / vy : 1.0;
  return f;
}

}  // namespace tubenum
