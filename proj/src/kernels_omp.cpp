#include <omp.h>

#include <algorithm>
#include <exception>
#include <mutex>

#include "weyltrunc/errors.hpp"
#include "weyltrunc/kernels.hpp"
#include "weyltrunc/weyl.hpp"
#include "kernels_common.hpp"

namespace weyltrunc::kernels {

namespace {

// Exceptions must not escape an OpenMP region; the first one is rethrown
// after the region ends.
class ExceptionSink {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!first_) first_ = std::current_exception();
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

struct OrbitKeyed {
  Weight top;  // dominant member of the orbit of (+-)x
  WeylElement w;  // minimal element with (+-)x = w (+-x)^-
  Weight x;
};

struct OrbitGroup {
  std::size_t begin;
  std::size_t end;
};

std::vector<OrbitKeyed> key_by_orbit(const RootSystem& rs, const WeightSet& points, bool antipodal,
                                     ExceptionSink& sink) {
  std::vector<OrbitKeyed> keyed(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const auto& x = points[static_cast<std::size_t>(i)];
      const Weight y = antipodal ? -x : x;
      keyed[static_cast<std::size_t>(i)] = {dominant_weight(rs, y), minimal_orbit_element(rs, y), x};
    } catch (...) {
      sink.capture();
    }
  }
  sink.rethrow();
  std::sort(keyed.begin(), keyed.end(), [](const OrbitKeyed& a, const OrbitKeyed& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.x < b.x;
  });
  return keyed;
}

std::vector<OrbitGroup> group_ranges(const std::vector<OrbitKeyed>& keyed) {
  std::vector<OrbitGroup> groups;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].top == keyed[i].top) ++j;
    groups.push_back({i, j});
    i = j;
  }
  return groups;
}

}  // namespace

int worker_count() { return omp_get_max_threads(); }
void set_worker_count(int n) { omp_set_num_threads(std::max(1, n)); }

WeightSet scan_box(std::size_t rank, std::int64_t lo, std::int64_t hi, const WeightPredicate& keep,
                   std::uint64_t max_volume) {
  const auto volume = detail::box_volume(rank, lo, hi, max_volume);
  const auto side = hi - lo + 1;
  std::vector<Weight> found;
  ExceptionSink sink;
#pragma omp parallel
  {
    std::vector<Weight> local;
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(volume); ++idx) {
      try {
        const auto x = detail::decode_box_index(rank, lo, side, static_cast<std::uint64_t>(idx));
        if (keep(x)) local.push_back(x);
      } catch (...) {
        sink.capture();
      }
    }
#pragma omp critical(weyltrunc_scan_merge)
    found.insert(found.end(), local.begin(), local.end());
  }
  sink.rethrow();
  return make_weight_set(std::move(found));
}

CounterexampleCollector pairwise_violations(const WeightSet& outside, const WeightSet& set, const WeightRelation& leq,
                                            std::size_t max_counterexamples) {
  CounterexampleCollector result(max_counterexamples);
  ExceptionSink sink;
  const auto n = static_cast<std::int64_t>(outside.size());
#pragma omp parallel
  {
    CounterexampleCollector local(max_counterexamples);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        const auto& x = outside[static_cast<std::size_t>(i)];
        for (const auto& xp : set)
          if (leq(x, xp)) local.add({x, xp});
      } catch (...) {
        sink.capture();
      }
    }
#pragma omp critical(weyltrunc_pairwise_merge)
    result.merge(std::move(local));
  }
  sink.rethrow();
  return result;
}

CounterexampleCollector excellent_violations(const RootSystem& rs, const WeightSet& outside, const WeightSet& set,
                                             bool antipodal, std::size_t max_counterexamples) {
  ExceptionSink sink;
  const auto out_keyed = key_by_orbit(rs, outside, antipodal, sink);
  const auto set_keyed = key_by_orbit(rs, set, antipodal, sink);
  const auto out_groups = group_ranges(out_keyed);
  const auto set_groups = group_ranges(set_keyed);

  CounterexampleCollector result(max_counterexamples);
  const auto n = static_cast<std::int64_t>(out_groups.size());
#pragma omp parallel
  {
    CounterexampleCollector local(max_counterexamples);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t gi = 0; gi < n; ++gi) {
      try {
        const auto& gu = out_groups[static_cast<std::size_t>(gi)];
        const auto& top_u = out_keyed[gu.begin].top;
        for (const auto& gs : set_groups) {
          const auto& top_s = set_keyed[gs.begin].top;
          if (top_u == top_s) {
            for (auto a = gu.begin; a < gu.end; ++a)
              for (auto b = gs.begin; b < gs.end; ++b)
                if (bruhat_leq(rs, out_keyed[a].w, set_keyed[b].w)) local.add({out_keyed[a].x, set_keyed[b].x});
          } else if (dominance_less(rs, top_u, top_s)) {
            // Every pair in the block is a violation; members are sorted by x.
            local.add_count(static_cast<std::uint64_t>(gu.end - gu.begin) * (gs.end - gs.begin));
            for (auto a = gu.begin; a < gu.end; ++a) {
              if (local.saturated_below({out_keyed[a].x, set_keyed[gs.begin].x})) break;
              for (auto b = gs.begin; b < gs.end; ++b) {
                Counterexample c{out_keyed[a].x, set_keyed[b].x};
                if (local.saturated_below(c)) break;
                local.offer(std::move(c));
              }
            }
          }
        }
      } catch (...) {
        sink.capture();
      }
    }
#pragma omp critical(weyltrunc_excellent_merge)
    result.merge(std::move(local));
  }
  sink.rethrow();
  return result;
}

BitRows strict_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t words = (n + 63) / 64;
  BitRows above(n, std::vector<std::uint64_t>(words, 0));
  ExceptionSink sink;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    try {
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq(i, j)) above[i][j / 64] |= std::uint64_t{1} << (j % 64);
    } catch (...) {
      sink.capture();
    }
  }
  sink.rethrow();
  return above;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const BitRows& above) {
  const auto n = above.size();
  const std::size_t words = n ? above[0].size() : 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_row(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    std::vector<std::uint64_t> reach2(words, 0);
    for (std::size_t k = 0; k < n; ++k)
      if (above[i][k / 64] >> (k % 64) & 1)
        for (std::size_t w = 0; w < words; ++w) reach2[w] |= above[k][w];
    for (std::size_t j = 0; j < n; ++j) {
      const bool up = above[i][j / 64] >> (j % 64) & 1;
      const bool via = reach2[j / 64] >> (j % 64) & 1;
      if (up && !via) per_row[i].emplace_back(i, j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto& row : per_row) edges.insert(edges.end(), row.begin(), row.end());
  return edges;
}

}  // namespace weyltrunc::kernels
