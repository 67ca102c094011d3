#pragma once

#include <cstdint>
#include <vector>

#include "tubenum/sim/family.hpp"
#include "tubenum/sim/stats.hpp"

namespace tubenum {

struct TwoEndsReport {
  double eps1 = 0.5;
  int window_cells = 0;
  double max_ratio = 0;   // max over tubes and windows of window mass / shaded mass
  double mean_ratio = 0;  // mean over tubes of the per-tube max
  double constant = 0;    // max_ratio / delta^eps1
  double threshold = 0;   // 4 delta^(eps1/2)
  bool within_threshold = false;
  bool concentrated = false;  // max_ratio >= 0.9
  /// Verdict: under the threshold and not packed into one window. At desk
  /// scale the threshold exceeds 1, so concentration is what fails a family.
  bool holds() const { return within_threshold && !concentrated; }
};

/// Windows cover axial length window_cells (in cells) starting at each
/// shaded cell, in axial order.
TwoEndsReport check_two_ends(const ShadedFamily& family, double eps1);

struct PlanyReport {
  double angle_threshold_cells = 1;  // C in "angle <= C delta"
  std::uint64_t cells_examined = 0;
  std::uint64_t cells_within = 0;
  double fraction_within = 0;
  double max_angle = 0;   // radians
  double mean_angle = 0;
};

/// Per cell: top-2 eigenspace of sum v v^T over incident directions, then the
/// largest angle of an incident direction to that plane. Examines at most
/// max_cells shaded cells, chosen by a fixed stride.
PlanyReport check_plany(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                        double angle_threshold_cells, std::uint64_t max_cells = 20000);

struct TransversalityLevel {
  double radius = 0;
  std::uint32_t max_cap_count = 0;
  double max_ratio = 0;   // max_cap_count / (r^eps1 mu)
  double mean_ratio = 0;  // mean over examined cells
};

struct TransversalityReport {
  double eps1 = 0.5;
  double mu = 0;
  std::uint64_t cells_examined = 0;
  std::vector<TransversalityLevel> levels;  // r = 2 delta, 4 delta, ... < 1
};

/// Cap centers are the incident directions of each examined cell (at most
/// max_centers of them, evenly spaced); counts are over all incident tubes.
TransversalityReport check_robust_transversality(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                                                 const IncidenceStats& stats, double eps1,
                                                 std::uint64_t max_cells = 2000, std::size_t max_centers = 64);

struct ParallelReport {
  int max_per_direction = 0;
  std::size_t directions_used = 0;
};

ParallelReport check_m_parallel(const ShadedFamily& family);

struct ExceptionalSetReport {
  double eps1 = 0.5;
  double m = 1;
  double threshold = 0;      // mu threshold of the incidence bound
  std::uint64_t exceptional_cells = 0;
  double fraction = 0;       // exceptional / |E_Y|
  double allowed = 0;        // delta^eps1
  bool within = false;
};

/// dim 4 only: cells of E_Y with multiplicity above
/// delta^(-3 eps1) m^(9/10) lambda^(-101/100) delta^(-49/50) mass^(1/10).
ExceptionalSetReport check_exceptional_set(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                                           const IncidenceStats& stats, double eps1, double m);

}  // namespace tubenum
