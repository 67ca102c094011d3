#pragma once

#include <cstdint>
#include <vector>

#include "tubenum/sim/grid.hpp"

namespace tubenum {

/// Unit vectors, pairwise at angle >= delta as lines (v and -v identified).
struct DirectionNet {
  int dim = 4;
  int N = 16;
  double delta = 1.0 / 16;
  std::uint64_t seed = 0;
  std::vector<Vec> points;
  std::uint64_t candidates_examined = 0;

  /// |points| * delta^(dim-1), the constant in |net| ~ delta^(1-dim).
  double density_constant() const;
};

struct NetOptions {
  /// The candidate stream has budget * N^(dim-1) points; the greedy pass
  /// accepts every candidate separated from all points accepted before it.
  double budget = 32.0;
  /// Overrides the stream length when nonzero.
  std::uint64_t max_candidates = 0;
};

/// Greedy packing over a Cranley-Patterson shifted Halton stream mapped to
/// the sphere. Deterministic given (dim, N, seed, options).
DirectionNet build_direction_net(int dim, int N, std::uint64_t seed, const NetOptions& options = {});

/// Angle between the lines spanned by unit vectors u and v, in [0, pi/2].
double line_angle(const Vec& u, const Vec& v, int dim);

/// Smallest pairwise line angle, by brute force (for tests and reports).
double min_pairwise_angle(const DirectionNet& net);

}  // namespace tubenum
