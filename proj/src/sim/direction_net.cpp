#include "tubenum/sim/direction_net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "tubenum/sim/error.hpp"
#include "tubenum/sim/rng.hpp"

namespace tubenum {

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Vec sphere_point(int dim, const double u[3]) {
  constexpr double two_pi = 2 * std::numbers::pi;
  Vec v{};
  if (dim == 3) {
    const double z = 2 * u[0] - 1;
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    v = {r * std::cos(two_pi * u[1]), r * std::sin(two_pi * u[1]), z, 0};
  } else {
    // uniform unit quaternion
    const double a = std::sqrt(1 - u[0]), b = std::sqrt(u[0]);
    v = {a * std::sin(two_pi * u[1]), a * std::cos(two_pi * u[1]), b * std::sin(two_pi * u[2]),
         b * std::cos(two_pi * u[2])};
  }
  return v;
}

struct CellKey {
  std::uint64_t operator()(const std::array<int, 4>& c) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : c) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ULL;
    return h;
  }
};

class HashGrid {
 public:
  HashGrid(int dim, double cell) : dim_(dim), cell_(cell) {}

  std::array<int, 4> key(const Vec& p) const {
    std::array<int, 4> k{};
    for (int i = 0; i < dim_; ++i) k[i] = static_cast<int>(std::floor(p[i] / cell_));
    return k;
  }

  void insert(const Vec& p, std::uint32_t id) { cells_[key(p)].push_back(id); }

  /// Visits ids stored in cells that may hold points within `radius` of p;
  /// requires radius <= cell / 2 so that two cells per axis suffice.
  template <class F>
  bool any_neighbor(const Vec& p, double radius, F&& pred) const {
    std::array<int, 4> lo{}, hi{};
    for (int i = 0; i < dim_; ++i) {
      lo[i] = static_cast<int>(std::floor((p[i] - radius) / cell_));
      hi[i] = static_cast<int>(std::floor((p[i] + radius) / cell_));
    }
    std::array<int, 4> k{};
    const int total = 1 << dim_;
    for (int n = 0; n < total; ++n) {
      bool repeat = false;
      for (int i = 0; i < dim_; ++i) {
        const bool upper = (n >> i) & 1;
        if (upper && hi[i] == lo[i]) repeat = true;
        k[i] = upper ? hi[i] : lo[i];
      }
      if (repeat) continue;
      const auto it = cells_.find(k);
      if (it == cells_.end()) continue;
      for (std::uint32_t id : it->second) {
        if (pred(id)) return true;
      }
    }
    return false;
  }

 private:
  int dim_;
  double cell_;
  std::unordered_map<std::array<int, 4>, std::vector<std::uint32_t>, CellKey> cells_;
};

}  // namespace

double DirectionNet::density_constant() const {
  return static_cast<double>(points.size()) * std::pow(delta, dim - 1);
}

double line_angle(const Vec& u, const Vec& v, int dim) {
  const double c = std::min(1.0, std::abs(dot(u, v, dim)));
  return std::acos(c);
}

DirectionNet build_direction_net(int dim, int N, std::uint64_t seed, const NetOptions& options) {
  GridSpec{dim, N}.validate(true);
  DirectionNet net;
  net.dim = dim;
  net.N = N;
  net.delta = 1.0 / N;
  net.seed = seed;

  const double sep = net.delta * (1 - 1e-9);
  const double cos_sep = std::cos(sep);
  const double max_dot2 = cos_sep * cos_sep;
  const double chord = 2 * std::sin(net.delta / 2);
  HashGrid grid(dim, 2 * chord);

  Rng rng(Rng::derive_seed(seed, 0x6e6574));
  const double shift[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
  constexpr unsigned bases[3] = {2, 3, 5};

  std::uint64_t stream = options.max_candidates;
  if (stream == 0) {
    stream = static_cast<std::uint64_t>(options.budget * std::pow(static_cast<double>(N), dim - 1));
  }
  for (std::uint64_t i = 1; i <= stream; ++i) {
    double u[3];
    for (int j = 0; j < 3; ++j) {
      u[j] = radical_inverse(i, bases[j]) + shift[j];
      if (u[j] >= 1) u[j] -= 1;
    }
    Vec v = sphere_point(dim, u);
    ++net.candidates_examined;
    const bool close = grid.any_neighbor(v, chord * (1 + 1e-6), [&](std::uint32_t id) {
      const double d = dot(v, net.points[id], dim);
      return d * d > max_dot2;
    });
    if (close) continue;
    const auto id = static_cast<std::uint32_t>(net.points.size());
    net.points.push_back(v);
    Vec neg{};
    for (int k = 0; k < dim; ++k) neg[k] = -v[k];
    grid.insert(v, id);
    grid.insert(neg, id);
  }
  return net;
}

double min_pairwise_angle(const DirectionNet& net) {
  double best = std::numbers::pi / 2;
  for (std::size_t i = 0; i < net.points.size(); ++i) {
    for (std::size_t j = i + 1; j < net.points.size(); ++j) {
      best = std::min(best, line_angle(net.points[i], net.points[j], net.dim));
    }
  }
  return best;
}

}  // namespace tubenum
