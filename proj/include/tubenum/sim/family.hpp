#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubenum/sim/direction_net.hpp"
#include "tubenum/sim/tube.hpp"

namespace tubenum {

struct ShadedTube {
  Tube tube;
  /// Positions into tube.cells, ascending.
  std::vector<std::uint16_t> shading;

  std::size_t shaded_count() const { return shading.size(); }
  double density() const { return static_cast<double>(shading.size()) / static_cast<double>(tube.cells.size()); }
};

/// Generator names: single, bush, hairbrush, plany_slab, random.
struct GeneratorConfig {
  std::string name = "random";
  /// Number of tubes. Unset means min(N^(dim-1), eligible * m), i.e. mass 1
  /// when the net allows it; `all_directions` means eligible * m.
  std::optional<std::int64_t> count;
  bool all_directions = false;
  /// Tubes per direction.
  int m = 1;
  /// Slab half-angle in units of delta (plany_slab only).
  double rho_cells = 4.0;
  /// Direction of the tube built by `single`.
  std::optional<Vec> direction;
};

/// Shading kinds: full, random, two_ends, one_end.
struct ShadingConfig {
  std::string kind = "full";
  double lambda = 1.0;
  double eps1 = 0.5;
};

struct ShadedFamily {
  GridSpec spec;
  std::uint64_t seed = 0;
  GeneratorConfig generator;
  ShadingConfig shading;
  std::vector<ShadedTube> tubes;
  std::size_t net_size = 0;
  std::size_t eligible_directions = 0;
  /// net index -> number of tubes in that direction
  std::map<int, int> per_direction;
  int max_parallel = 0;
  /// one_end shadings whose window could not hold the requested fraction
  std::size_t capped_tubes = 0;
};

/// Builds the tubes (fully shaded). Throws SimError(Infeasible) when the
/// requested count exceeds eligible directions times m, and
/// SimError(InvalidConfig) for unknown generators or bad parameters.
ShadedFamily make_family(const GridSpec& spec, const DirectionNet& net, const GeneratorConfig& config,
                         std::uint64_t seed);

/// Replaces every tube's shading. Throws SimError(InvalidConfig) unless
/// 0 < lambda <= 1 and 0 <= eps1 <= 1.
void make_shading(ShadedFamily& family, const ShadingConfig& config);

/// Number of whole cells in a two-ends window: ceil(N * delta^eps1).
int window_cells(int N, double eps1);
/// Number of axial blocks used by the two_ends shading: ceil(delta^-(1-eps1)).
int two_ends_blocks(int N, double eps1);

}  // namespace tubenum
