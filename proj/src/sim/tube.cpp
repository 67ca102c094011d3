#include "tubenum/sim/tube.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tubenum/sim/error.hpp"

namespace tubenum {

namespace {
constexpr double kGuard = 1e-9;
}

double distance_to_segment(const Vec& p, const Vec& a, const Vec& v, double half_length, int dim) {
  Vec d{};
  for (int i = 0; i < dim; ++i) d[i] = p[i] - a[i];
  const double s = std::clamp(dot(d, v, dim), -half_length, half_length);
  double r2 = 0;
  for (int i = 0; i < dim; ++i) {
    const double e = d[i] - s * v[i];
    r2 += e * e;
  }
  return std::sqrt(r2);
}

Tube rasterize_tube(const GridSpec& spec, const Vec& direction, const Vec& anchor, int direction_index) {
  const int dim = spec.dim;
  const int N = spec.N;
  Tube tube;
  tube.direction = normalized(direction, dim);
  tube.anchor = anchor;
  tube.direction_index = direction_index;
  const Vec& v = tube.direction;

  // Work in cell units: delta = 1, segment half length N/2.
  Vec a{};
  for (int i = 0; i < dim; ++i) a[i] = anchor[i] * N;
  const double half = N / 2.0;
  const double radius2 = 1.0 + 2 * kGuard;

  int k = 0;
  for (int i = 1; i < dim; ++i) {
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  }
  const double vk = v[k];
  // Cells near the line lie within 1/|v_k| of the axis point in the same slice.
  const double reach = 1.0 / std::abs(vk) + 1e-6;

  const double lo = std::min(a[k] - half * vk, a[k] + half * vk) - 1;
  const double hi = std::max(a[k] - half * vk, a[k] + half * vk) + 1;
  const int slice_lo = std::max(0, static_cast<int>(std::floor(lo)));
  const int slice_hi = std::min(N - 1, static_cast<int>(std::ceil(hi)));

  std::vector<std::pair<std::uint32_t, float>> found;
  std::array<int, 4> c{};
  std::array<int, 3> others{};
  {
    int o = 0;
    for (int i = 0; i < dim; ++i) {
      if (i != k) others[o++] = i;
    }
  }
  for (int s = slice_lo; s <= slice_hi; ++s) {
    const double xk = s + 0.5;
    const double t = (xk - a[k]) / vk;
    Vec p{};
    for (int i = 0; i < dim; ++i) p[i] = a[i] + t * v[i];
    c[k] = s;
    std::array<int, 3> from{}, count{};
    int total = 1;
    for (int o = 0; o < dim - 1; ++o) {
      const double x = p[others[o]] - 0.5;  // cell j has center j + 0.5
      from[o] = std::max(0, static_cast<int>(std::ceil(x - reach)));
      const int to = std::min(N - 1, static_cast<int>(std::floor(x + reach)));
      count[o] = std::max(0, to - from[o] + 1);
      total *= count[o];
    }
    for (int n = 0; n < total; ++n) {
      int m = n;
      for (int o = 0; o < dim - 1; ++o) {
        c[others[o]] = from[o] + m % count[o];
        m /= count[o];
      }
      Vec center{};
      for (int i = 0; i < dim; ++i) center[i] = c[i] + 0.5;
      Vec d{};
      for (int i = 0; i < dim; ++i) d[i] = center[i] - a[i];
      const double proj = dot(d, v, dim);
      const double sc = std::clamp(proj, -half, half);
      double r2 = 0;
      for (int i = 0; i < dim; ++i) {
        const double e = d[i] - sc * v[i];
        r2 += e * e;
      }
      if (r2 <= radius2) found.emplace_back(spec.index(c), static_cast<float>(proj));
    }
  }
  if (found.empty()) throw SimError(SimErrorKind::EmptyTube, "tube misses every cell of the grid");
  std::sort(found.begin(), found.end());
  tube.cells.reserve(found.size());
  tube.axial.reserve(found.size());
  for (const auto& [cell, ax] : found) {
    tube.cells.push_back(cell);
    tube.axial.push_back(ax);
  }
  return tube;
}

}  // namespace tubenum
