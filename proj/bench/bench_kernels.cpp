// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "weyltrunc/kernels.hpp"
#include "weyltrunc/truncate.hpp"

using namespace weyltrunc;

namespace {

const AffineContext& b2() {
  static const AffineContext ctx(build_root_system({'B', 2}), 7);
  return ctx;
}

const AffineContext& a3() {
  static const AffineContext ctx(build_root_system({'A', 3}), 7);
  return ctx;
}

void BM_ScanBox(benchmark::State& state) {
  const auto& ctx = a3();
  const auto keep = [&](const Weight& y) { return in_lambda(ctx, 3, y); };
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto s = parallel ? kernels::scan_box(3, -28, 28, keep, 1u << 24) : kernels::serial::scan_box(3, -28, 28, keep, 1u << 24);
    benchmark::DoNotOptimize(s);
  }
  state.SetLabel(parallel ? "openmp" : "serial");
}

// Excellent ideal check of Lambda_2 for B2 p=7 against its universe.
void BM_VerifyIdeal(benchmark::State& state) {
  const auto& ctx = b2();
  const auto set = lambda_set(ctx, 2);
  const auto universe = lambda_universe(ctx, 2);
  const auto order = OrderKind::from_tag(OrderTag::Excellent, ctx);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = parallel ? verify_ideal(ctx.root_system(), set, order, universe)
                      : serial::verify_ideal(ctx.root_system(), set, order, universe);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(parallel ? "openmp" : "serial");
}

// Hasse diagram of Lambda_1 for B2 p=7 under the excellent order.
void BM_TransitiveReduction(benchmark::State& state) {
  const auto& ctx = b2();
  const auto& rs = ctx.root_system();
  const auto pts = lambda_set(ctx, 1);
  const auto leq = [&](std::size_t i, std::size_t j) { return excellent_leq(rs, pts[i], pts[j]); };
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    if (parallel) {
      auto covers = kernels::transitive_reduction(kernels::strict_relation(pts.size(), leq));
      benchmark::DoNotOptimize(covers);
    } else {
      auto covers = kernels::serial::transitive_reduction(pts.size(), leq);
      benchmark::DoNotOptimize(covers);
    }
  }
  state.SetLabel(parallel ? "openmp" : "serial");
}

}  // namespace

BENCHMARK(BM_ScanBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyIdeal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitiveReduction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
