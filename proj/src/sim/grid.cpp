#include "tubenum/sim/grid.hpp"

#include <cmath>
#include <string>

#include "tubenum/sim/error.hpp"

namespace tubenum {

double dot(const Vec& a, const Vec& b, int dim) {
  double s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

Vec normalized(const Vec& v, int dim) {
  const double n = std::sqrt(dot(v, v, dim));
  if (!(n > 0)) throw SimError(SimErrorKind::InvalidConfig, "zero direction vector");
  Vec r{};
  for (int i = 0; i < dim; ++i) r[i] = v[i] / n;
  return r;
}

void GridSpec::validate(bool allow_large) const {
  if (dim != 3 && dim != 4) {
    throw SimError(SimErrorKind::InvalidConfig, "dim must be 3 or 4, got " + std::to_string(dim));
  }
  if (N < 4 || (N & (N - 1)) != 0) {
    throw SimError(SimErrorKind::InvalidConfig, "N must be a power of two >= 4, got " + std::to_string(N));
  }
  const int cap = dim == 4 ? kMaxN4 : kMaxN3;
  if (!allow_large && N > cap) {
    throw SimError(SimErrorKind::InvalidConfig, "N = " + std::to_string(N) + " exceeds the cap " +
                                                    std::to_string(cap) + " for dim " + std::to_string(dim));
  }
  if (cell_count() > (std::uint64_t{1} << 31)) {
    throw SimError(SimErrorKind::InvalidConfig, "grid too large");
  }
}

std::uint64_t GridSpec::cell_count() const {
  std::uint64_t c = 1;
  for (int i = 0; i < dim; ++i) c *= static_cast<std::uint64_t>(N);
  return c;
}

std::uint32_t GridSpec::index(const std::array<int, 4>& coords) const {
  std::uint32_t idx = 0;
  for (int j = dim - 1; j >= 0; --j) idx = idx * static_cast<std::uint32_t>(N) + static_cast<std::uint32_t>(coords[j]);
  return idx;
}

std::array<int, 4> GridSpec::coords(std::uint32_t index) const {
  std::array<int, 4> c{};
  for (int j = 0; j < dim; ++j) {
    c[j] = static_cast<int>(index % static_cast<std::uint32_t>(N));
    index /= static_cast<std::uint32_t>(N);
  }
  return c;
}

Vec GridSpec::center(std::uint32_t index) const {
  const auto c = coords(index);
  Vec p{};
  for (int j = 0; j < dim; ++j) p[j] = (c[j] + 0.5) / N;
  return p;
}

}  // namespace tubenum
