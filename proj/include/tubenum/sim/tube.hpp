#pragma once

#include <cstdint>
#include <vector>

#include "tubenum/sim/grid.hpp"

namespace tubenum {

/// Cells whose centers lie within delta of the axis segment
/// anchor +- direction/2.
struct Tube {
  Vec direction{};
  Vec anchor{};
  int direction_index = -1;  // position in the direction net, -1 if none
  std::vector<std::uint32_t> cells;  // ascending
  std::vector<float> axial;          // signed axial position of each cell, in cells
};

/// Throws SimError(EmptyTube) if no cell qualifies.
Tube rasterize_tube(const GridSpec& spec, const Vec& direction, const Vec& anchor, int direction_index = -1);

/// Distance from a point to the segment a + s v, |s| <= half_length.
double distance_to_segment(const Vec& p, const Vec& a, const Vec& v, double half_length, int dim);

}  // namespace tubenum
