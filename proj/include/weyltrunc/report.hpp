#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyltrunc/weight.hpp"

namespace weyltrunc {

using Counterexample = std::vector<Weight>;

/// Outcome of one exhaustive check. passed <=> counterexamples.empty().
/// An informational check records its outcome without asserting it; an
/// aggregate report carries its sub-checks in `checks`.
struct VerificationReport {
  std::string check_id;
  bool passed = true;
  bool asserted = true;
  std::map<std::string, std::int64_t> counts;
  std::vector<Counterexample> counterexamples;
  std::optional<double> elapsed_ms;
  std::string note;
  std::vector<VerificationReport> checks;
};

/// Keeps the `limit` lexicographically smallest counterexamples seen and the
/// exact total. Merging per-worker collectors yields the same result as a
/// single serial pass.
class CounterexampleCollector {
 public:
  explicit CounterexampleCollector(std::size_t limit) : limit_(limit) {}

  void add(Counterexample c) {
    ++total_;
    offer(std::move(c));
  }
  /// Raises the total without offering counterexamples; pair with offer().
  void add_count(std::uint64_t n) { total_ += n; }
  /// Offers a counterexample already accounted for by add_count().
  void offer(Counterexample c) {
    if (limit_ == 0) return;
    if (kept_.size() >= limit_ && !sorted_) prune();
    if (kept_.size() >= limit_ && !(c < kept_.back())) return;
    kept_.push_back(std::move(c));
    sorted_ = false;
    if (kept_.size() >= 2 * limit_) prune();
  }

  void merge(CounterexampleCollector&& other) {
    total_ += other.total_;
    for (auto& c : other.kept_) kept_.push_back(std::move(c));
    sorted_ = false;
    prune();
  }

  /// True when a counterexample >= c can no longer be kept.
  bool saturated_below(const Counterexample& c) {
    if (limit_ == 0) return true;
    if (kept_.size() < limit_) return false;
    if (!sorted_) prune();
    return !(c < kept_.back());
  }

  std::uint64_t total() const noexcept { return total_; }
  std::vector<Counterexample> take() {
    prune();
    return std::move(kept_);
  }

 private:
  void prune() {
    std::sort(kept_.begin(), kept_.end());
    kept_.erase(std::unique(kept_.begin(), kept_.end()), kept_.end());
    if (kept_.size() > limit_) kept_.resize(limit_);
    sorted_ = true;
  }

  std::size_t limit_;
  std::uint64_t total_ = 0;
  std::vector<Counterexample> kept_;
  bool sorted_ = true;
};

/// Folds sub-checks into one report: passes iff every asserted sub-check passes.
VerificationReport aggregate(std::string check_id, std::vector<VerificationReport> checks, std::size_t max_counterexamples);

}  // namespace weyltrunc
