#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tubenum {

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string observed;
  std::string expected;
};

struct CriterionResult {
  int id = 0;
  std::string tag;  // exponents, sim, determinism
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;  // wall time; printed, never serialized
  std::vector<SubCheck> checks;
  std::string error;  // exception text if the run threw

  bool within_budget() const { return seconds <= budget_seconds; }
  bool pass() const;
};

struct VerifyOptions {
  /// Empty runs everything; otherwise one of exponents, sim, determinism.
  std::string only;
  std::uint64_t seed = 7;
};

std::vector<std::string> verify_tags();

/// Criteria 1..12 filtered by tag. Criterion 12 reruns the other selected
/// criteria and compares the serialized reports byte for byte.
std::vector<CriterionResult> run_verify(const VerifyOptions& options);

/// Timing-free report; identical across runs with the same options.
nlohmann::json verify_report(const std::vector<CriterionResult>& results);

/// One line per criterion plus indented sub-check lines.
std::string verify_text(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace tubenum
