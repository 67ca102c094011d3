#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tubenum/calculus/rational.hpp"
#include "tubenum/sim/family.hpp"

namespace tubenum {

/// Per-cell count of tubes whose shading contains the cell.
std::vector<std::uint32_t> multiplicity(const ShadedFamily& family);

struct IncidenceStats {
  int dim = 4;
  int N = 16;
  std::uint64_t tube_count = 0;
  std::uint64_t shaded_cells = 0;           // |E_Y| in cells
  std::uint64_t tube_incidences = 0;        // sum over tubes of |Y(T)|
  std::uint64_t cell_incidences = 0;        // sum over cells of multiplicity
  std::uint32_t max_multiplicity = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;  // multiplicity -> cells, multiplicity >= 1
  Rational volume;   // |E_Y| * delta^dim
  Rational lambda;   // average over tubes of |Y(T)| / |T|
  Rational mu;       // average multiplicity over E_Y
  Rational mass;     // delta^(dim-1) * #tubes
  double mean_tube_cells = 0;
  std::uint64_t min_tube_cells = 0;
  std::uint64_t max_tube_cells = 0;

  bool double_count_holds() const { return tube_incidences == cell_incidences; }
  /// volume * mu, which equals delta^dim * sum |Y(T)| exactly.
  Rational volume_times_mu() const { return volume * mu; }
};

IncidenceStats compute_stats(const ShadedFamily& family, const std::vector<std::uint32_t>& mult);
IncidenceStats compute_stats(const ShadedFamily& family);

}  // namespace tubenum
