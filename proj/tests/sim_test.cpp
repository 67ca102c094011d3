#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tubenum/sim/bounds.hpp"
#include "tubenum/sim/checks.hpp"
#include "tubenum/sim/direction_net.hpp"
#include "tubenum/sim/error.hpp"
#include "tubenum/sim/experiment.hpp"
#include "tubenum/sim/family.hpp"
#include "tubenum/sim/rng.hpp"
#include "tubenum/sim/stats.hpp"
#include "tubenum/sim/tube.hpp"

namespace tubenum {
namespace {

Vec random_unit(Rng& rng, int dim) {
  Vec v{};
  double n2 = 0;
  do {
    n2 = 0;
    for (int i = 0; i < dim; ++i) {
      v[i] = rng.uniform(-1, 1);
      n2 += v[i] * v[i];
    }
  } while (n2 > 1 || n2 < 1e-6);
  for (int i = 0; i < dim; ++i) v[i] /= std::sqrt(n2);
  return v;
}

// Every cell of the grid, tested against the segment directly.
std::vector<std::uint32_t> brute_force_cells(const GridSpec& spec, const Vec& v, const Vec& a) {
  std::vector<std::uint32_t> out;
  const double delta = spec.delta();
  for (std::uint64_t idx = 0; idx < spec.cell_count(); ++idx) {
    const Vec c = spec.center(static_cast<std::uint32_t>(idx));
    double s = 0;
    for (int i = 0; i < spec.dim; ++i) s += (c[i] - a[i]) * v[i];
    s = std::clamp(s, -0.5, 0.5);
    double d2 = 0;
    for (int i = 0; i < spec.dim; ++i) {
      const double r = c[i] - a[i] - s * v[i];
      d2 += r * r;
    }
    if (d2 <= delta * delta * (1 + 2e-9)) out.push_back(static_cast<std::uint32_t>(idx));
  }
  return out;
}

ShadedFamily build(int dim, int N, const std::string& generator, std::uint64_t seed = 7,
                   bool all_directions = false) {
  const DirectionNet net = build_direction_net(dim, N, seed);
  GeneratorConfig g;
  g.name = generator;
  g.all_directions = all_directions;
  return make_family(GridSpec{dim, N}, net, g, seed);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto k = rng.below(7);
    ASSERT_LT(k, 7u);
    ++hits[k];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_NE(Rng::derive_seed(7, 1), Rng::derive_seed(7, 2));
  EXPECT_EQ(Rng::derive_seed(7, 1), Rng::derive_seed(7, 1));
}

TEST(Grid, IndexRoundTripAndValidation) {
  const GridSpec g{4, 8};
  for (std::uint32_t idx : {0u, 1u, 77u, 4095u}) EXPECT_EQ(g.index(g.coords(idx)), idx);
  EXPECT_EQ(g.cell_count(), 4096u);
  EXPECT_DOUBLE_EQ(g.center(0)[0], 1.0 / 16);
  EXPECT_THROW((GridSpec{4, 12}.validate()), SimError);
  EXPECT_THROW((GridSpec{5, 8}.validate()), SimError);
  EXPECT_THROW((GridSpec{4, 64}.validate()), SimError);
  EXPECT_NO_THROW((GridSpec{4, 64}.validate(true)));
  EXPECT_NO_THROW((GridSpec{3, 128}.validate()));
}

TEST(DirectionNet, PointsAreSeparatedAsLines) {
  for (const auto& [dim, N] : {std::pair{3, 16}, std::pair{4, 8}}) {
    const DirectionNet net = build_direction_net(dim, N, 3);
    const double cos_limit = std::cos(net.delta * (1 - 1e-9));
    for (std::size_t i = 0; i < net.points.size(); ++i) {
      double n2 = 0;
      for (int k = 0; k < dim; ++k) n2 += net.points[i][k] * net.points[i][k];
      ASSERT_NEAR(n2, 1.0, 1e-12);
      for (std::size_t j = 0; j < i; ++j) {
        double c = 0;
        for (int k = 0; k < dim; ++k) c += net.points[i][k] * net.points[j][k];
        ASSERT_LE(std::abs(c), cos_limit + 1e-12) << i << " " << j;
      }
    }
    EXPECT_GE(min_pairwise_angle(net), net.delta * (1 - 1e-9));
  }
}

TEST(DirectionNet, CardinalityAndCoverage) {
  const DirectionNet net = build_direction_net(3, 16, 7);
  EXPECT_GE(net.points.size(), 256u / 8);
  EXPECT_LE(net.points.size(), 256u * 8);
  EXPECT_NEAR(net.density_constant(), static_cast<double>(net.points.size()) / 256, 1e-12);

  // A greedy packing leaves no room: random directions sit within 2 delta of the net.
  Rng rng(99);
  int covered = 0;
  for (int t = 0; t < 1000; ++t) {
    const Vec u = random_unit(rng, 3);
    for (const Vec& p : net.points) {
      if (line_angle(u, p, 3) <= 2 * net.delta) {
        ++covered;
        break;
      }
    }
  }
  EXPECT_GE(covered, 990);
}

TEST(DirectionNet, DeterministicPerSeed) {
  const DirectionNet a = build_direction_net(4, 8, 5);
  const DirectionNet b = build_direction_net(4, 8, 5);
  const DirectionNet c = build_direction_net(4, 8, 6);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, c.points);
}

TEST(DirectionNet, SingleCandidateGivesOnePoint) {
  NetOptions opt;
  opt.max_candidates = 1;
  for (int dim : {3, 4}) EXPECT_EQ(build_direction_net(dim, 4, 1, opt).points.size(), 1u);
}

TEST(Tube, MatchesBruteForce) {
  Rng rng(2024);
  for (const auto& [dim, N] : {std::pair{3, 16}, std::pair{4, 8}}) {
    const GridSpec spec{dim, N};
    for (int t = 0; t < 40; ++t) {
      const Vec v = random_unit(rng, dim);
      Vec a{};
      for (int i = 0; i < dim; ++i) a[i] = rng.uniform(0.2, 0.8);
      const Tube tube = rasterize_tube(spec, v, a);
      EXPECT_EQ(tube.cells, brute_force_cells(spec, v, a)) << dim << " " << t;
      ASSERT_EQ(tube.axial.size(), tube.cells.size());
      for (std::size_t k = 0; k < tube.cells.size(); ++k) {
        const Vec c = spec.center(tube.cells[k]);
        double s = 0;
        for (int i = 0; i < dim; ++i) s += (c[i] - a[i]) * v[i];
        EXPECT_NEAR(tube.axial[k], s * N, 1e-3);
      }
    }
  }
}

TEST(Tube, AxisParallelCount) {
  // Offsets of +-1/2 cell in the three transverse coordinates are within one
  // cell of the axis, the next ring out is not: 8 cells per slice.
  const GridSpec spec{4, 16};
  const Tube t = rasterize_tube(spec, {1, 0, 0, 0}, {0.5, 0.5, 0.5, 0.5});
  EXPECT_EQ(t.cells.size(), 128u);
  EXPECT_EQ(t.cells, brute_force_cells(spec, {1, 0, 0, 0}, {0.5, 0.5, 0.5, 0.5}));
}

TEST(Tube, ReversedDirectionAndRepeatsAgree) {
  const GridSpec spec{4, 8};
  const Vec v = normalized({1, 2, -1, 0.5}, 4);
  const Vec w{-v[0], -v[1], -v[2], -v[3]};
  const Vec a{0.4, 0.55, 0.5, 0.6};
  EXPECT_EQ(rasterize_tube(spec, v, a).cells, rasterize_tube(spec, w, a).cells);
  EXPECT_EQ(rasterize_tube(spec, v, a).cells, rasterize_tube(spec, v, a).cells);
}

TEST(Tube, OutsideCubeIsEmpty) {
  const GridSpec spec{3, 8};
  EXPECT_THROW(rasterize_tube(spec, {1, 0, 0, 0}, {0.5, 3.0, 3.0, 0}), SimError);
}

TEST(Stats, SingleFullTube) {
  const GridSpec spec{3, 16};
  GeneratorConfig g;
  g.name = "single";
  DirectionNet unused;
  unused.dim = 3;
  unused.N = 16;
  const ShadedFamily f = make_family(spec, unused, g, 1);
  ASSERT_EQ(f.tubes.size(), 1u);
  const IncidenceStats s = compute_stats(f);
  EXPECT_EQ(s.mu, Rational(1));
  EXPECT_EQ(s.lambda, Rational(1));
  EXPECT_EQ(s.volume, Rational(static_cast<long>(f.tubes[0].tube.cells.size()), 16L * 16 * 16));
}

TEST(Stats, DoubleCountingForEveryGenerator) {
  for (const char* gen : {"random", "bush", "hairbrush", "plany_slab"}) {
    ShadedFamily f = build(4, 8, gen);
    for (const char* kind : {"full", "random", "two_ends", "one_end"}) {
      ShadingConfig sc;
      sc.kind = kind;
      sc.lambda = std::string(kind) == "full" ? 1.0 : 0.25;
      make_shading(f, sc);
      const IncidenceStats s = compute_stats(f);
      EXPECT_TRUE(s.double_count_holds()) << gen << " " << kind;
      Rational cell_volume(1);
      for (int i = 0; i < 4; ++i) cell_volume /= Rational(8);
      EXPECT_EQ(s.volume_times_mu(), cell_volume * Rational(static_cast<long>(s.tube_incidences)));
      std::uint64_t hist_cells = 0;
      for (const auto& [k, n] : s.histogram) hist_cells += n;
      EXPECT_EQ(hist_cells, s.shaded_cells);
    }
  }
}

TEST(Stats, SubShadingLowersMultiplicityPointwise) {
  ShadedFamily f = build(4, 8, "random");
  const std::vector<std::uint32_t> full = multiplicity(f);
  for (const char* kind : {"random", "two_ends", "one_end"}) {
    ShadedFamily g = f;
    ShadingConfig sc;
    sc.kind = kind;
    sc.lambda = 0.25;
    make_shading(g, sc);
    const std::vector<std::uint32_t> sub = multiplicity(g);
    ASSERT_EQ(sub.size(), full.size());
    for (std::size_t i = 0; i < sub.size(); ++i) ASSERT_LE(sub[i], full[i]) << kind;
  }
}

TEST(Family, BushSharesCenterCell) {
  const GridSpec spec{4, 16};
  const ShadedFamily f = build(4, 16, "bush", 7, true);
  EXPECT_EQ(f.tubes.size(), f.net_size);
  const std::uint32_t center = spec.index({8, 8, 8, 8});
  for (const auto& t : f.tubes) EXPECT_TRUE(std::binary_search(t.tube.cells.begin(), t.tube.cells.end(), center));
  EXPECT_EQ(multiplicity(f)[center], f.tubes.size());
  EXPECT_EQ(check_m_parallel(f).max_per_direction, 1);
}

TEST(Family, PlanySlabStaysNearPlane) {
  const DirectionNet net = build_direction_net(4, 16, 7);
  GeneratorConfig g;
  g.name = "plany_slab";
  g.rho_cells = 4;
  const ShadedFamily f = make_family(GridSpec{4, 16}, net, g, 7);
  ASSERT_FALSE(f.tubes.empty());
  const double rho = 4.0 / 16;
  for (const auto& t : f.tubes) {
    const Vec& v = t.tube.direction;
    EXPECT_LE(std::asin(std::min(1.0, std::sqrt(v[2] * v[2] + v[3] * v[3]))), rho * (1 + 1e-9));
  }

  g.rho_cells = 2;
  const ShadedFamily thin = make_family(GridSpec{4, 16}, net, g, 7);
  const PlanyReport p = check_plany(thin, multiplicity(thin), 3);
  EXPECT_GT(p.cells_examined, 0u);
  EXPECT_DOUBLE_EQ(p.fraction_within, 1.0);
}

TEST(Family, InfeasibleCountAndBadParameters) {
  const DirectionNet net = build_direction_net(3, 8, 1);
  GeneratorConfig g;
  g.count = static_cast<std::int64_t>(net.points.size()) * 2 + 1;
  g.m = 2;
  try {
    make_family(GridSpec{3, 8}, net, g, 1);
    FAIL();
  } catch (const SimError& e) {
    EXPECT_EQ(e.kind(), SimErrorKind::Infeasible);
  }
  g.count.reset();
  g.name = "bush";
  EXPECT_THROW(make_family(GridSpec{3, 8}, net, g, 1), SimError);  // bush needs m = 1
  g.name = "spiral";
  g.m = 1;
  EXPECT_THROW(make_family(GridSpec{3, 8}, net, g, 1), SimError);

  ShadedFamily f = build(3, 8, "random");
  ShadingConfig sc;
  sc.kind = "random";
  sc.lambda = 0;
  EXPECT_THROW(make_shading(f, sc), SimError);
  sc.lambda = 1.5;
  EXPECT_THROW(make_shading(f, sc), SimError);
}

TEST(Family, ParallelCopiesPerDirection) {
  const DirectionNet net = build_direction_net(3, 8, 1);
  GeneratorConfig g;
  g.m = 3;
  g.all_directions = true;
  const ShadedFamily f = make_family(GridSpec{3, 8}, net, g, 1);
  EXPECT_EQ(f.tubes.size(), net.points.size() * 3);
  EXPECT_EQ(check_m_parallel(f).max_per_direction, 3);
}

TEST(Family, SameSeedSameFamily) {
  const ShadedFamily a = build(4, 8, "hairbrush", 11);
  const ShadedFamily b = build(4, 8, "hairbrush", 11);
  ASSERT_EQ(a.tubes.size(), b.tubes.size());
  for (std::size_t i = 0; i < a.tubes.size(); ++i) EXPECT_EQ(a.tubes[i].tube.cells, b.tubes[i].tube.cells);
}

TEST(Shading, FractionsAndWindows) {
  ShadedFamily f = build(4, 16, "random");
  ShadingConfig sc;
  sc.kind = "full";
  make_shading(f, sc);
  EXPECT_EQ(compute_stats(f).lambda, Rational(1));

  sc.kind = "random";
  sc.lambda = 0.25;
  make_shading(f, sc);
  EXPECT_NEAR(compute_stats(f).lambda.to_double(), 0.25, 0.02);

  sc.kind = "two_ends";
  make_shading(f, sc);
  for (const auto& t : f.tubes) {
    EXPECT_TRUE(std::is_sorted(t.shading.begin(), t.shading.end()));
    EXPECT_LT(t.shading.back(), t.tube.cells.size());
  }
  const TwoEndsReport spread = check_two_ends(f, 0.5);
  EXPECT_TRUE(spread.within_threshold);
  EXPECT_FALSE(spread.concentrated);

  sc.kind = "one_end";
  make_shading(f, sc);
  // At N = 16 the threshold 4 delta^(eps1/2) is 2, above any ratio, so the
  // packed shading shows up only as concentration.
  const TwoEndsReport packed = check_two_ends(f, 0.5);
  EXPECT_TRUE(packed.concentrated);
  EXPECT_GT(packed.max_ratio, spread.max_ratio);
  EXPECT_GE(packed.max_ratio, 0.9);

  EXPECT_EQ(window_cells(16, 0.5), 4);
  EXPECT_EQ(two_ends_blocks(16, 0.5), 4);
  EXPECT_EQ(window_cells(32, 0.5), 6);
}

TEST(Family, RandomFullDirectionFamilyNearlyCovers) {
  const ShadedFamily f = build(4, 32, "random", 7, true);
  EXPECT_EQ(f.tubes.size(), f.net_size);
  EXPECT_GE(compute_stats(f).volume.to_double(), 0.5);
}

TEST(Shading, OneEndAtFineScaleIsConcentrated) {
  ShadedFamily f = build(3, 64, "random");
  ShadingConfig sc;
  sc.kind = "one_end";
  sc.lambda = 0.25;
  sc.eps1 = 0.5;
  make_shading(f, sc);
  const TwoEndsReport r = check_two_ends(f, 0.5);
  EXPECT_GE(r.max_ratio, 0.9);
  EXPECT_FALSE(r.holds());
}

TEST(Bounds, RandomFullFamilyBeatsTe32Half) {
  const ShadedFamily f = build(4, 32, "random");
  const MarginReport r = verify_te_bound(compute_stats(f), 3, 2, 0.5);
  EXPECT_GE(r.margin, 0);
  EXPECT_TRUE(r.within_budget);
}

TEST(Bounds, FullVolumeSignAnalysis) {
  IncidenceStats s;
  s.dim = 4;
  s.N = 16;
  s.tube_count = 1;
  s.shaded_cells = 16 * 16 * 16 * 16;
  s.volume = Rational(1);
  s.lambda = Rational(1, 4);
  s.mass = Rational(1, 2);
  const MarginReport r = verify_te_bound(s, 4, 2, 0.5);
  EXPECT_NEAR(r.margin, -2 * std::log(0.25) - 0.5 * std::log(0.5), 1e-12);
  EXPECT_GE(r.margin, 0);
  EXPECT_TRUE(r.within_budget);
}

TEST(Bounds, GenericFormAgreesWithTemplate) {
  ShadedFamily f = build(4, 8, "random");
  const IncidenceStats s = compute_stats(f);
  const MarginReport a = verify_te_bound(s, 3, 2, 0.5, 0.1, 0.2);
  const MarginReport b =
      verify_volume_bound(s, te_volume_exponents(Rational(3), Rational(2), Rational(1, 2)), {}, 0.1, 0.2);
  EXPECT_NEAR(a.margin, b.margin, 1e-12);
  EXPECT_NEAR(a.budget, 0.1 * std::log(8.0) + 0.2, 1e-12);
  EXPECT_EQ(a.within_budget, a.margin >= -a.budget);
}

TEST(Fit, RecoversSyntheticSlope) {
  std::vector<ScalingRow> rows;
  for (int N : {8, 16, 32, 64}) {
    ScalingRow r;
    r.N = N;
    r.delta = 1.0 / N;
    r.volume = 3 * std::pow(r.delta, 0.7);
    rows.push_back(r);
  }
  const ScalingFit fit = fit_scaling(rows, 4);
  EXPECT_FALSE(fit.degenerate);
  EXPECT_NEAR(fit.slope, 0.7, 1e-12);
  EXPECT_NEAR(fit.d_hat, 3.3, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);

  for (auto& r : rows) r.delta = 0.25;
  EXPECT_TRUE(fit_scaling(rows, 4).degenerate);
}

TEST(Experiment, SingleTubeScalesLikeALine) {
  ExperimentConfig c;
  c.dim = 3;
  c.N_list = {8, 16, 32, 64};
  c.generator.name = "single";
  const ExperimentResult r = run_experiment(c);
  ASSERT_TRUE(r.fitted);
  EXPECT_NEAR(r.fit.d_hat, 1.0, 0.1);
  const std::string csv = to_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Experiment, ConfigErrorsNamePath) {
  const auto error_path = [](const nlohmann::json& doc) {
    try {
      parse_experiment_config(doc);
    } catch (const ConfigError& e) {
      return e.path();
    }
    return std::string("<none>");
  };
  const nlohmann::json ok = nlohmann::json::parse(R"({
    "dim": 4, "N": 8, "seed": 1,
    "generator": {"name": "random"},
    "shading": {"kind": "random", "params": {"lambda": 0.25}}
  })");
  EXPECT_NO_THROW(parse_experiment_config(ok));
  EXPECT_DOUBLE_EQ(parse_experiment_config(ok).shading.lambda, 0.25);

  nlohmann::json bad = ok;
  bad["shading"]["params"]["lambda"] = 2;
  EXPECT_EQ(error_path(bad), "/shading/params/lambda");
  bad = ok;
  bad["colour"] = "red";
  EXPECT_EQ(error_path(bad), "/colour");
  bad = ok;
  bad["N"] = 12;
  EXPECT_EQ(error_path(bad), "/N");
  bad = ok;
  bad["generator"]["name"] = 3;
  EXPECT_EQ(error_path(bad), "/generator/name");
  bad = ok;
  bad["checks"] = {{{"name", "two_ends"}, {"params", {{"eps1", "half"}}}}};
  EXPECT_EQ(error_path(bad), "/checks/0/params/eps1");
}

}  // namespace
}  // namespace tubenum
