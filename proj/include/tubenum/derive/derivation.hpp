#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tubenum/calculus/json.hpp"
#include "tubenum/calculus/ops.hpp"

namespace tubenum {

/// Where a step comes from: a short location label and a one-line note.
struct Anchor {
  std::string location;
  std::string note;

  static Anchor plumbing(std::string note = {});
};

inline constexpr const char* kPlumbingTag = "artifact plumbing";

/// One recorded calculus operation. `params` holds everything besides the
/// input bounds that the operation needs, so the step can be re-executed.
struct Step {
  std::string id;
  std::string op;
  std::vector<std::string> inputs;
  nlohmann::json params = nlohmann::json::object();
  Bound output;
  Anchor anchor;
};

/// A derivation step produced an exponent different from the asserted one.
class DerivationMismatch : public std::runtime_error {
 public:
  DerivationMismatch(std::string step, std::string symbol, Rational expected, Rational actual);
  const std::string& step() const { return step_; }
  const std::string& symbol() const { return symbol_; }
  const Rational& expected() const { return expected_; }
  const Rational& actual() const { return actual_; }

 private:
  std::string step_;
  std::string symbol_;
  Rational expected_;
  Rational actual_;
};

struct Checkpoint {
  std::string step;
  ExponentVector expected;
};

struct Derivation {
  std::string name;
  std::vector<Step> steps;
  std::vector<Checkpoint> checkpoints;
  /// Scalar outcomes (weights, exponents) keyed by name, rendered exactly.
  nlohmann::json results = nlohmann::json::object();

  const Step& step(const std::string& id) const;
  std::vector<Anchor> anchors() const;
};

/// Records steps while computing them. Axioms are available as inputs by id.
class DerivationBuilder {
 public:
  DerivationBuilder(std::string name, const std::map<std::string, Bound>& axioms);

  const Bound& get(const std::string& id) const;

  const Bound& axiom(const std::string& id, const Bound& b, Anchor anchor);
  const Bound& interpolate(const std::string& id, const std::string& b1, const std::string& b2, const Rational& t,
                           Anchor anchor);
  Rational solve_weight(const std::string& b1, const std::string& b2, const std::string& sym,
                        const Rational& target);
  const Bound& eliminate(const std::string& id, const std::string& b1, const std::string& b2, const std::string& sym,
                         Anchor anchor);
  const Bound& compose(const std::string& id, const std::string& outer, const std::string& inner, Anchor anchor);
  const Bound& substitute(const std::string& id, const std::string& input, const std::string& sym,
                          const ExponentVector& replacement, Anchor anchor);
  const Bound& drop(const std::string& id, const std::string& input, const std::string& sym, Anchor anchor);
  const Bound& double_count(const std::string& id, const std::string& input, const DoubleCountFrame& frame,
                            Anchor anchor);
  const Bound& weaken(const std::string& id, const std::string& input, const ExponentVector& factor, Loss loss,
                      Anchor anchor);
  const Bound& rename(const std::string& id, const std::string& input, const std::string& quantity, Anchor anchor);

  /// Throws DerivationMismatch on the first symbol (in name order) whose
  /// exponent differs.
  void checkpoint(const std::string& id, const ExponentVector& expected);
  void result(const std::string& key, nlohmann::json value);

  const Derivation& derivation() const { return d_; }
  Derivation take() { return std::move(d_); }

 private:
  const Bound& record(Step step);

  Derivation d_;
  std::map<std::string, Bound> env_;
};

/// Entry in `replay` comparison. Empty `mismatch` means every step matched.
struct ReplayReport {
  bool ok = true;
  std::string mismatch;
  std::size_t steps_checked = 0;
};

/// Re-executes every step from its recorded inputs and parameters and
/// compares the outputs with the recorded ones.
ReplayReport replay(const Derivation& d, const std::map<std::string, Bound>& axioms);

void to_json(nlohmann::json& j, const Anchor& a);
void to_json(nlohmann::json& j, const Step& s);
void to_json(nlohmann::json& j, const Derivation& d);
void from_json(const nlohmann::json& j, Anchor& a);
void from_json(const nlohmann::json& j, Step& s);
void from_json(const nlohmann::json& j, Derivation& d);

/// Fixed-width table: step id, op, weights, resulting bound, anchor.
std::string step_table(const Derivation& d);

/// "p/q (decimal)" with 10 significant digits.
std::string exact_and_decimal(const Rational& r);

}  // namespace tubenum
