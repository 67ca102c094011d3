#pragma once

#include <array>
#include <cstdint>

namespace tubenum {

using Vec = std::array<double, 4>;  // only the first `dim` entries are used

double dot(const Vec& a, const Vec& b, int dim);
Vec normalized(const Vec& v, int dim);

/// Unit cube [0,1]^dim split into N^dim cells of side delta = 1/N.
struct GridSpec {
  int dim = 4;
  int N = 16;

  static constexpr int kMaxN4 = 32;
  static constexpr int kMaxN3 = 128;

  /// Throws SimError(InvalidConfig) unless dim is 3 or 4 and N is a power of
  /// two with 4 <= N. The desk-scale caps apply unless allow_large is set.
  void validate(bool allow_large = false) const;

  double delta() const { return 1.0 / N; }
  std::uint64_t cell_count() const;
  /// Linear index sum_j i_j N^j.
  std::uint32_t index(const std::array<int, 4>& coords) const;
  std::array<int, 4> coords(std::uint32_t index) const;
  Vec center(std::uint32_t index) const;  // in unit-cube coordinates
};

}  // namespace tubenum
