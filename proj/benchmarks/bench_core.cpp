#include <benchmark/benchmark.h>

#include "support/corpus.hpp"
#include "triplepoint/triplepoint.hpp"

namespace tp = triplepoint;

static void BM_Qints(benchmark::State& state) {
  const auto ctx = tp::nu_from_delta(2.3);
  const int max_k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tp::qints(ctx, max_k));
}
BENCHMARK(BM_Qints)->Arg(20)->Arg(200);

static void BM_GraphNorm(benchmark::State& state) {
  const auto spec = tp::testing::h_shape(static_cast<int>(state.range(0)), 3, 2, 3);
  const auto g = spec.principal.graded();
  for (auto _ : state) benchmark::DoNotOptimize(tp::graph_norm(g));
}
BENCHMARK(BM_GraphNorm)->Arg(1)->Arg(5)->Arg(11);

static void BM_BranchLambda(benchmark::State& state) {
  const auto ctx = tp::nu_from_delta(2.2);
  const int n = 10;
  const auto rows = tp::allowed_ratios(ctx, n);
  for (auto _ : state) {
    for (const auto& row : rows) {
      benchmark::DoNotOptimize(tp::extract_lambda(tp::build_branch_matrix(ctx, n, row.p, row.q)));
    }
  }
}
BENCHMARK(BM_BranchLambda);

static void BM_Battery(benchmark::State& state) {
  const auto spec = tp::testing::h_shape(3, 2, 1, 2);
  const auto pr = spec.principal.graded();
  const auto du = spec.dual.graded();
  for (auto _ : state) benchmark::DoNotOptimize(tp::run_battery(pr, du));
}
BENCHMARK(BM_Battery);
BENCHMARK_MAIN();
