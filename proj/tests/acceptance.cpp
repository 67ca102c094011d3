// Runs every acceptance criterion once and prints one line per criterion.
// Failing criteria are followed by their failing sub-checks. Exit status is 0
// only when every criterion passes within its time budget.

#include <cstdio>
#include <exception>

#include "tubenum/cli/verify.hpp"

int main() {
  using namespace tubenum;
  std::vector<CriterionResult> results;
  try {
    results = run_verify(VerifyOptions{});
  } catch (const std::exception& e) {
    std::printf("FAIL  acceptance run aborted: %s\n", e.what());
    return 1;
  }
  int failed = 0;
  for (const auto& r : results) {
    const bool ok = r.pass();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d [%s] %s  (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", r.id, r.tag.c_str(),
                r.title.c_str(), r.seconds, r.budget_seconds);
    if (ok) continue;
    if (!r.error.empty()) std::printf("        error: %s\n", r.error.c_str());
    if (!r.within_budget()) std::printf("        over the time budget\n");
    for (const auto& s : r.checks) {
      if (s.pass) continue;
      std::printf("        %s: observed %s, expected %s\n", s.name.c_str(), s.observed.c_str(), s.expected.c_str());
    }
  }
  std::printf("%zu of %zu criteria pass\n", results.size() - failed, results.size());
  return failed == 0 && !results.empty() ? 0 : 1;
}
