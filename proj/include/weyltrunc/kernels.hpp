#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "weyltrunc/orders.hpp"
#include "weyltrunc/report.hpp"
#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weight.hpp"

// Hot loops of the truncation checks. The functions in weyltrunc::kernels are
// OpenMP-parallel; weyltrunc::kernels::serial holds the plain reference
// versions the tests compare them against. Both produce identical output for
// any thread count.
namespace weyltrunc::kernels {

using WeightPredicate = std::function<bool(const Weight&)>;
using WeightRelation = std::function<bool(const Weight&, const Weight&)>;

/// Sorted set of points of the cube [lo, hi]^rank satisfying keep.
WeightSet scan_box(std::size_t rank, std::int64_t lo, std::int64_t hi, const WeightPredicate& keep,
                   std::uint64_t max_volume);

/// Pairs (x, x') with x in `outside`, x' in `set`, and leq(x, x').
CounterexampleCollector pairwise_violations(const WeightSet& outside, const WeightSet& set, const WeightRelation& leq,
                                            std::size_t max_counterexamples);

/// Same as pairwise_violations for the excellent order (same-orbit reading),
/// or the antipodal one when `antipodal` is set, grouped by W-orbit: one
/// dominance test per pair of orbits, Bruhat tests only within an orbit.
CounterexampleCollector excellent_violations(const RootSystem& rs, const WeightSet& outside, const WeightSet& set,
                                             bool antipodal, std::size_t max_counterexamples);

/// Strict relation as bitsets: above[i] has bit j iff i != j and leq(i, j).
using BitRows = std::vector<std::vector<std::uint64_t>>;
BitRows strict_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

/// Cover pairs (i, j) of a strict partial order, sorted.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const BitRows& above);

namespace serial {

WeightSet scan_box(std::size_t rank, std::int64_t lo, std::int64_t hi, const WeightPredicate& keep,
                   std::uint64_t max_volume);

CounterexampleCollector pairwise_violations(const WeightSet& outside, const WeightSet& set, const WeightRelation& leq,
                                            std::size_t max_counterexamples);

/// Naive O(n^3) cover test straight from the definition.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

}  // namespace serial

/// Number of OpenMP workers currently in effect.
int worker_count();
void set_worker_count(int n);

}  // namespace weyltrunc::kernels
