#include "weyltrunc/kernels.hpp"
#include "kernels_common.hpp"

namespace weyltrunc::kernels::serial {

WeightSet scan_box(std::size_t rank, std::int64_t lo, std::int64_t hi, const WeightPredicate& keep,
                   std::uint64_t max_volume) {
  const auto volume = detail::box_volume(rank, lo, hi, max_volume);
  const auto side = hi - lo + 1;
  std::vector<Weight> found;
  for (std::uint64_t idx = 0; idx < volume; ++idx) {
    auto x = detail::decode_box_index(rank, lo, side, idx);
    if (keep(x)) found.push_back(x);
  }
  return make_weight_set(std::move(found));
}

CounterexampleCollector pairwise_violations(const WeightSet& outside, const WeightSet& set, const WeightRelation& leq,
                                            std::size_t max_counterexamples) {
  CounterexampleCollector result(max_counterexamples);
  for (const auto& x : outside)
    for (const auto& xp : set)
      if (leq(x, xp)) result.add({x, xp});
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::vector<bool>> strict(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) strict[i][j] = i != j && leq(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (strict[i][k] && strict[k][j]) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace weyltrunc::kernels::serial
