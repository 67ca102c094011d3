#include "tubenum/sim/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tubenum/sim/error.hpp"
#include "tubenum/sim/rng.hpp"

namespace tubenum {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw SimError(SimErrorKind::InvalidConfig, message); }

Vec center_point(int dim) {
  Vec c{};
  for (int i = 0; i < dim; ++i) c[i] = 0.5;
  return c;
}

/// Anchor placing the unit segment inside the cube, uniform over such anchors.
Vec inside_anchor(const Vec& v, int dim, Rng& rng) {
  Vec a{};
  for (int i = 0; i < dim; ++i) {
    const double h = std::abs(v[i]) / 2;
    a[i] = rng.uniform(h, 1 - h);
  }
  return a;
}

/// Largest interval of s with p + (s +- 1/2) v inside the cube, clipped to
/// [-1/2, 1/2]; returns false if empty.
bool segment_shift_range(const Vec& p, const Vec& v, int dim, double& lo, double& hi) {
  lo = -0.5;
  hi = 0.5;
  for (int i = 0; i < dim; ++i) {
    const double h = std::abs(v[i]) / 2;
    if (std::abs(v[i]) < 1e-15) continue;
    // need h <= p_i + s v_i <= 1 - h
    double a = (h - p[i]) / v[i], b = (1 - h - p[i]) / v[i];
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  return lo <= hi;
}

std::vector<int> pick_directions(std::vector<int> eligible, std::size_t how_many, Rng& rng) {
  rng.shuffle(eligible);
  eligible.resize(how_many);
  std::sort(eligible.begin(), eligible.end());
  return eligible;
}

std::size_t resolve_count(const GeneratorConfig& config, const GridSpec& spec, std::size_t eligible) {
  const std::size_t capacity = eligible * static_cast<std::size_t>(config.m);
  if (config.all_directions) return capacity;
  if (config.count) {
    if (*config.count < 1) invalid("generator count must be positive");
    const auto c = static_cast<std::size_t>(*config.count);
    if (c > capacity) {
      throw SimError(SimErrorKind::Infeasible, "requested " + std::to_string(c) + " tubes but only " +
                                                   std::to_string(eligible) + " eligible directions with m = " +
                                                   std::to_string(config.m));
    }
    return c;
  }
  const auto unit_mass = static_cast<std::size_t>(std::llround(std::pow(spec.N, spec.dim - 1)));
  return std::min(unit_mass, capacity);
}

void add_tube(ShadedFamily& f, const Vec& v, const Vec& anchor, int index) {
  ShadedTube st;
  st.tube = rasterize_tube(f.spec, v, anchor, index);
  st.shading.resize(st.tube.cells.size());
  std::iota(st.shading.begin(), st.shading.end(), std::uint16_t{0});
  f.tubes.push_back(std::move(st));
}

}  // namespace

int window_cells(int N, double eps1) {
  return static_cast<int>(std::ceil(std::pow(static_cast<double>(N), 1 - eps1) - 1e-9));
}

int two_ends_blocks(int N, double eps1) { return window_cells(N, eps1); }

ShadedFamily make_family(const GridSpec& spec, const DirectionNet& net, const GeneratorConfig& config,
                         std::uint64_t seed) {
  spec.validate(true);
  if (net.dim != spec.dim || net.N != spec.N) invalid("direction net does not match the grid");
  if (config.m < 1) invalid("m must be at least 1");
  const int dim = spec.dim;

  ShadedFamily f;
  f.spec = spec;
  f.seed = seed;
  f.generator = config;
  f.net_size = net.points.size();
  Rng rng(Rng::derive_seed(seed, 0x66616d));
  const Vec center = center_point(dim);

  std::vector<int> all(net.points.size());
  std::iota(all.begin(), all.end(), 0);

  // Spread `count` tubes over the chosen directions, m per direction.
  auto place = [&](const std::vector<int>& eligible, std::size_t count, auto&& anchor_for) {
    f.eligible_directions = eligible.size();
    const std::size_t dirs = (count + config.m - 1) / config.m;
    const auto chosen = pick_directions(eligible, dirs, rng);
    std::size_t left = count;
    for (int d : chosen) {
      for (int k = 0; k < config.m && left > 0; ++k, --left) {
        add_tube(f, net.points[d], anchor_for(net.points[d]), d);
      }
    }
  };

  if (config.name == "single") {
    if (config.count && *config.count != 1) invalid("single generator builds exactly one tube");
    const Vec v = config.direction ? normalized(*config.direction, dim) : normalized(Vec{1.0, 0.31, 0.17, 0.07}, dim);
    f.eligible_directions = 1;
    add_tube(f, v, center, -1);
  } else if (config.name == "random") {
    place(all, resolve_count(config, spec, all.size()),
          [&](const Vec& v) { return inside_anchor(v, dim, rng); });
  } else if (config.name == "bush") {
    if (config.m != 1) invalid("bush tubes all pass through one point, so m must be 1");
    Vec root{};
    for (int i = 0; i < dim; ++i) root[i] = (spec.N / 2 + 0.5) / spec.N;
    place(all, resolve_count(config, spec, all.size()), [&](const Vec&) { return root; });
  } else if (config.name == "hairbrush") {
    if (net.points.size() < 2) throw SimError(SimErrorKind::Infeasible, "hairbrush needs at least two directions");
    const Vec stem = net.points[0];
    std::vector<int> bristles(all.begin() + 1, all.end());
    const std::size_t count = resolve_count(config, spec, bristles.size());
    add_tube(f, stem, center, 0);
    place(bristles, count > 1 ? count - 1 : 0, [&](const Vec& v) {
      const double s = rng.uniform(-0.5, 0.5);
      Vec p{};
      for (int i = 0; i < dim; ++i) p[i] = center[i] + s * stem[i];
      double lo = 0, hi = 0;
      const double shift = segment_shift_range(p, v, dim, lo, hi) ? rng.uniform(lo, hi) : 0.0;
      Vec a{};
      for (int i = 0; i < dim; ++i) a[i] = p[i] + shift * v[i];
      return a;
    });
    f.eligible_directions = bristles.size() + 1;
  } else if (config.name == "plany_slab") {
    if (!(config.rho_cells > 0)) invalid("rho must be positive");
    const double rho = config.rho_cells * spec.delta();
    const double limit = std::sin(std::min(rho, std::acos(0.0)));
    std::vector<int> eligible;
    for (int d : all) {
      const Vec& v = net.points[d];
      double off = 0;
      for (int i = 2; i < dim; ++i) off += v[i] * v[i];
      if (std::sqrt(off) <= limit * (1 + 1e-12)) eligible.push_back(d);
    }
    place(eligible, resolve_count(config, spec, eligible.size()), [&](const Vec& v) {
      Vec a = center;
      for (int i = 0; i < 2; ++i) {
        const double h = std::abs(v[i]) / 2;
        a[i] = rng.uniform(h, 1 - h);
      }
      return a;
    });
  } else {
    invalid("unknown generator '" + config.name + "'");
  }

  for (const auto& t : f.tubes) {
    if (t.tube.direction_index >= 0) ++f.per_direction[t.tube.direction_index];
  }
  f.max_parallel = f.tubes.empty() ? 0 : 1;
  for (const auto& [d, c] : f.per_direction) f.max_parallel = std::max(f.max_parallel, c);
  f.shading = ShadingConfig{};
  return f;
}

void make_shading(ShadedFamily& family, const ShadingConfig& config) {
  if (!(config.lambda > 0 && config.lambda <= 1)) invalid("lambda must lie in (0, 1]");
  if (!(config.eps1 >= 0 && config.eps1 <= 1)) invalid("eps1 must lie in [0, 1]");
  const int N = family.spec.N;
  Rng rng(Rng::derive_seed(family.seed, 0x736861));
  family.shading = config;
  family.capped_tubes = 0;

  for (auto& st : family.tubes) {
    const std::size_t n = st.tube.cells.size();
    // positions sorted along the axis; ties broken by cell index
    std::vector<std::uint16_t> by_axis(n);
    std::iota(by_axis.begin(), by_axis.end(), std::uint16_t{0});
    std::stable_sort(by_axis.begin(), by_axis.end(),
                     [&](std::uint16_t a, std::uint16_t b) { return st.tube.axial[a] < st.tube.axial[b]; });
    const auto target = [&](std::size_t size) {
      return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(config.lambda * static_cast<double>(size))));
    };

    std::vector<std::uint16_t> chosen;
    if (config.kind == "full") {
      chosen = by_axis;
    } else if (config.kind == "random") {
      std::vector<std::uint16_t> pool = by_axis;
      rng.shuffle(pool);
      pool.resize(std::min(n, target(n)));
      chosen = std::move(pool);
    } else if (config.kind == "two_ends") {
      const std::size_t blocks = std::min<std::size_t>(n, static_cast<std::size_t>(two_ends_blocks(N, config.eps1)));
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t from = b * n / blocks, to = (b + 1) * n / blocks;
        const std::size_t size = to - from;
        const std::size_t k = std::min(size, target(size));
        for (std::size_t j = 0; j < k; ++j) {
          chosen.push_back(by_axis[from + (2 * j + 1) * size / (2 * k)]);
        }
      }
    } else if (config.kind == "one_end") {
      const double start = st.tube.axial[by_axis.front()];
      const double length = window_cells(N, config.eps1);
      std::size_t window = 0;
      while (window < n && st.tube.axial[by_axis[window]] < start + length - 1e-6) ++window;
      const std::size_t want = target(n);
      if (want > window) ++family.capped_tubes;
      chosen.assign(by_axis.begin(), by_axis.begin() + static_cast<std::ptrdiff_t>(std::min(want, window)));
    } else {
      invalid("unknown shading kind '" + config.kind + "'");
    }
    std::sort(chosen.begin(), chosen.end());
    st.shading = std::move(chosen);
  }
}

}  // namespace tubenum
