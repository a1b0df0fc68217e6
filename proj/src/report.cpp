#include "weyltrunc/report.hpp"

namespace weyltrunc {

VerificationReport aggregate(std::string check_id, std::vector<VerificationReport> checks,
                             std::size_t max_counterexamples) {
  VerificationReport r;
  r.check_id = std::move(check_id);
  double total_ms = 0;
  for (const auto& c : checks) {
    if (c.elapsed_ms) total_ms += *c.elapsed_ms;
    if (!c.asserted || c.passed) continue;
    for (const auto& cx : c.counterexamples) {
      if (r.counterexamples.size() >= max_counterexamples) break;
      r.counterexamples.push_back(cx);
    }
  }
  r.passed = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return !c.asserted || c.passed; });
  if (!r.passed && r.counterexamples.empty()) r.counterexamples.push_back({});
  r.elapsed_ms = total_ms;
  r.checks = std::move(checks);
  return r;
}

}  // namespace weyltrunc
