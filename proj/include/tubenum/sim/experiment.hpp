#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tubenum/calculus/exponent_vector.hpp"
#include "tubenum/sim/bounds.hpp"
#include "tubenum/sim/checks.hpp"
#include "tubenum/sim/error.hpp"
#include "tubenum/sim/family.hpp"

namespace tubenum {

/// Invalid experiment config; path() names the offending key as a JSON
/// pointer, e.g. "/shading/params/lambda".
class ConfigError : public SimError {
 public:
  ConfigError(std::string path, const std::string& message)
      : SimError(SimErrorKind::InvalidConfig, path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct CheckRequest {
  std::string name;  // two_ends, plany, robust_transversality, m_parallel, exceptional_set
  double eps1 = 0.5;
  double angle_cells = 1;
  double m = 1;
  std::uint64_t max_cells = 0;  // 0: check default
};

/// Lower bound volume >= prod s^e over lambda, delta, mass, mu, m.
struct VolumeBoundSpec {
  std::string label;
  ExponentVector rhs;
  double eps = 0;
  double log_c = 0;
};

/// lambda^a delta^(4-d) mass^b.
ExponentVector te_volume_exponents(const Rational& d, const Rational& a, const Rational& b);

struct ExperimentConfig {
  int dim = 4;
  std::vector<int> N_list;
  std::uint64_t seed = 0;
  GeneratorConfig generator;
  ShadingConfig shading;
  std::vector<CheckRequest> checks;
  std::vector<VolumeBoundSpec> bounds;
  NetOptions net;
  bool allow_large = false;
};

/// Strict parse: unknown keys, wrong types and out-of-range values throw
/// ConfigError.
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);

struct ScaleResult {
  GridSpec spec;
  std::size_t net_size = 0;
  double net_constant = 0;
  IncidenceStats stats;
  ParallelReport parallel;
  std::size_t capped_tubes = 0;
  nlohmann::json checks = nlohmann::json::object();
  std::vector<MarginReport> margins;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ScaleResult> scales;
  bool fitted = false;
  ScalingFit fit;
};

ScaleResult run_scale(const ExperimentConfig& config, int N);
/// Same, reusing a net built for (config.dim, N, config.seed, config.net).
ScaleResult run_scale(const ExperimentConfig& config, int N, const DirectionNet& net);
/// Runs every N; fits when there are at least three scales.
ExperimentResult run_experiment(const ExperimentConfig& config);

nlohmann::json to_json(const IncidenceStats& s);
nlohmann::json to_json(const TwoEndsReport& r);
nlohmann::json to_json(const PlanyReport& r);
nlohmann::json to_json(const TransversalityReport& r);
nlohmann::json to_json(const ParallelReport& r);
nlohmann::json to_json(const ExceptionalSetReport& r);
nlohmann::json to_json(const MarginReport& r);
nlohmann::json to_json(const ScalingFit& f);
nlohmann::json to_json(const ExperimentResult& r);

/// One row per scale: N, delta, tubes, lambda, mu, volume, mass, then one
/// column per bound margin.
std::string to_csv(const ExperimentResult& r);

}  // namespace tubenum
