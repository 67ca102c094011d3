#include "tubenum/sim/checks.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace tubenum {

namespace {

/// Shaded cells picked by a fixed stride, mapped to consecutive slots.
std::vector<std::int32_t> sample_slots(const std::vector<std::uint32_t>& mult, std::uint64_t max_cells,
                                       std::uint64_t& count) {
  std::uint64_t shaded = 0;
  for (std::uint32_t m : mult) shaded += m > 0;
  const std::uint64_t stride = max_cells == 0 || shaded <= max_cells ? 1 : (shaded + max_cells - 1) / max_cells;
  std::vector<std::int32_t> slot(mult.size(), -1);
  std::uint64_t seen = 0;
  count = 0;
  for (std::size_t c = 0; c < mult.size(); ++c) {
    if (mult[c] == 0) continue;
    if (seen++ % stride == 0) slot[c] = static_cast<std::int32_t>(count++);
  }
  return slot;
}

}  // namespace

TwoEndsReport check_two_ends(const ShadedFamily& family, double eps1) {
  TwoEndsReport r;
  r.eps1 = eps1;
  r.window_cells = window_cells(family.spec.N, eps1);
  const double delta = family.spec.delta();
  std::vector<float> ax;
  double sum = 0;
  for (const auto& st : family.tubes) {
    if (st.shading.empty()) continue;
    ax.clear();
    for (std::uint16_t pos : st.shading) ax.push_back(st.tube.axial[pos]);
    std::sort(ax.begin(), ax.end());
    std::size_t best = 0, j = 0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
      if (j < i) j = i;
      while (j < ax.size() && ax[j] < ax[i] + r.window_cells - 1e-6) ++j;
      best = std::max(best, j - i);
    }
    const double ratio = static_cast<double>(best) / static_cast<double>(ax.size());
    r.max_ratio = std::max(r.max_ratio, ratio);
    sum += ratio;
  }
  if (!family.tubes.empty()) r.mean_ratio = sum / static_cast<double>(family.tubes.size());
  r.constant = r.max_ratio / std::pow(delta, eps1);
  r.threshold = 4 * std::pow(delta, eps1 / 2);
  r.within_threshold = r.max_ratio <= r.threshold;
  r.concentrated = r.max_ratio >= 0.9;
  return r;
}

PlanyReport check_plany(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                        double angle_threshold_cells, std::uint64_t max_cells) {
  PlanyReport r;
  r.angle_threshold_cells = angle_threshold_cells;
  const int dim = family.spec.dim;
  std::uint64_t count = 0;
  const auto slot = sample_slots(mult, max_cells, count);
  r.cells_examined = count;
  if (count == 0) return r;

  std::vector<Eigen::Matrix4d> moment(count, Eigen::Matrix4d::Zero());
  for (const auto& st : family.tubes) {
    Eigen::Vector4d v = Eigen::Vector4d::Zero();
    for (int i = 0; i < dim; ++i) v[i] = st.tube.direction[i];
    const Eigen::Matrix4d vv = v * v.transpose();
    for (std::uint16_t pos : st.shading) {
      const std::int32_t s = slot[st.tube.cells[pos]];
      if (s >= 0) moment[s] += vv;
    }
  }
  // orthonormal basis of the top-2 eigenspace for each examined cell
  std::vector<Eigen::Matrix<double, 4, 2>> plane(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(moment[s].topLeftCorner(dim, dim));
    Eigen::Matrix<double, 4, 2> basis = Eigen::Matrix<double, 4, 2>::Zero();
    basis.topRows(dim) = es.eigenvectors().rightCols(2);
    plane[s] = basis;
  }
  std::vector<double> worst(count, 0);
  for (const auto& st : family.tubes) {
    Eigen::Vector4d v = Eigen::Vector4d::Zero();
    for (int i = 0; i < dim; ++i) v[i] = st.tube.direction[i];
    for (std::uint16_t pos : st.shading) {
      const std::int32_t s = slot[st.tube.cells[pos]];
      if (s < 0) continue;
      const double inside = (plane[s].transpose() * v).squaredNorm();
      const double angle = std::asin(std::sqrt(std::clamp(1 - inside, 0.0, 1.0)));
      worst[s] = std::max(worst[s], angle);
    }
  }
  const double limit = angle_threshold_cells * family.spec.delta() * (1 + 1e-9);
  double sum = 0;
  for (double a : worst) {
    r.cells_within += a <= limit;
    r.max_angle = std::max(r.max_angle, a);
    sum += a;
  }
  r.fraction_within = static_cast<double>(r.cells_within) / static_cast<double>(count);
  r.mean_angle = sum / static_cast<double>(count);
  return r;
}

TransversalityReport check_robust_transversality(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                                                 const IncidenceStats& stats, double eps1, std::uint64_t max_cells,
                                                 std::size_t max_centers) {
  TransversalityReport r;
  r.eps1 = eps1;
  r.mu = stats.mu.to_double();
  const int dim = family.spec.dim;
  const double delta = family.spec.delta();
  std::uint64_t count = 0;
  const auto slot = sample_slots(mult, max_cells, count);
  r.cells_examined = count;

  std::vector<std::vector<std::uint32_t>> incident(count);
  for (std::uint32_t t = 0; t < family.tubes.size(); ++t) {
    const auto& st = family.tubes[t];
    for (std::uint16_t pos : st.shading) {
      const std::int32_t s = slot[st.tube.cells[pos]];
      if (s >= 0) incident[s].push_back(t);
    }
  }
  for (double radius = 2 * delta; radius < 1; radius *= 2) {
    TransversalityLevel level;
    level.radius = radius;
    const double cos_r = std::cos(radius);
    const double scale = std::pow(radius, eps1) * r.mu;
    double sum = 0;
    for (const auto& list : incident) {
      const std::size_t k = list.size();
      const std::size_t centers = std::min(k, max_centers);
      std::uint32_t best = 0;
      for (std::size_t c = 0; c < centers; ++c) {
        const Vec& center = family.tubes[list[c * k / centers]].tube.direction;
        std::uint32_t inside = 0;
        for (std::uint32_t t : list) {
          inside += std::abs(dot(center, family.tubes[t].tube.direction, dim)) >= cos_r * (1 - 1e-12);
        }
        best = std::max(best, inside);
      }
      level.max_cap_count = std::max(level.max_cap_count, best);
      const double ratio = scale > 0 ? best / scale : 0;
      level.max_ratio = std::max(level.max_ratio, ratio);
      sum += ratio;
    }
    if (count > 0) level.mean_ratio = sum / static_cast<double>(count);
    r.levels.push_back(level);
  }
  return r;
}

ParallelReport check_m_parallel(const ShadedFamily& family) {
  ParallelReport r;
  r.max_per_direction = family.max_parallel;
  r.directions_used = family.per_direction.size();
  if (family.per_direction.empty() && !family.tubes.empty()) r.directions_used = 1;
  return r;
}

ExceptionalSetReport check_exceptional_set(const ShadedFamily& family, const std::vector<std::uint32_t>& mult,
                                           const IncidenceStats& stats, double eps1, double m) {
  ExceptionalSetReport r;
  r.eps1 = eps1;
  r.m = m;
  const double delta = family.spec.delta();
  const double lambda = stats.lambda.to_double();
  const double mass = stats.mass.to_double();
  r.threshold = std::pow(delta, -3 * eps1) * std::pow(m, 0.9) * std::pow(lambda, -1.01) * std::pow(delta, -0.98) *
                std::pow(mass, 0.1);
  for (std::uint32_t x : mult) r.exceptional_cells += x > 0 && x > r.threshold;
  if (stats.shaded_cells > 0) {
    r.fraction = static_cast<double>(r.exceptional_cells) / static_cast<double>(stats.shaded_cells);
  }
  r.allowed = std::pow(delta, eps1);
  r.within = r.fraction <= r.allowed;
  return r;
}

}  // namespace tubenum
