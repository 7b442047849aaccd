#include <benchmark/benchmark.h>

#include <vector>

#include "strength/case_kernel.hpp"
#include "strength/codim.hpp"
#include "strength/hilbert_oracle.hpp"
#include "strength/slice_rank.hpp"
#include "strength/thresholds.hpp"
#include "strength/verifier.hpp"

using namespace strength;

static void BM_SliceRank(benchmark::State& state)
{
  const int d = static_cast<int>(state.range(0));
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_slice_rank(n, d));
    n = n % 1000000 + 7919;
  }
}
BENCHMARK(BM_SliceRank)->Arg(4)->Arg(10);

static void BM_PlateauSet(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(plateau_set(static_cast<int>(state.range(0)), 100000000));
}
BENCHMARK(BM_PlateauSet)->Arg(4)->Arg(10);

static void BM_FEvalBeta(benchmark::State& state)
{
  const int d = static_cast<int>(state.range(0));
  const std::vector<std::int64_t> tail(tail_length(d), 3);
  for (auto _ : state) benchmark::DoNotOptimize(f_eval(60, d, 40, tail));
}
BENCHMARK(BM_FEvalBeta)->Arg(4)->Arg(8)->Arg(10);

static void BM_FEvalSeries(benchmark::State& state)
{
  const int d = static_cast<int>(state.range(0));
  const std::vector<std::int64_t> tail(tail_length(d), 3);
  for (auto _ : state) benchmark::DoNotOptimize(f_eval_series(60, d, 40, tail));
}
BENCHMARK(BM_FEvalSeries)->Arg(4)->Arg(8)->Arg(10);

// One plateau point's worth of cases through the fixed-width kernel.
static void BM_CaseKernel(benchmark::State& state)
{
  const int d = static_cast<int>(state.range(0));
  const std::int64_t n = 5000;
  const std::int64_t k = n - general_slice_rank(n, d) + 1;
  const CaseKernel kernel(d, n);
  std::size_t cases = 0;
  for (auto _ : state) {
    kernel.run(n, k, std::min<std::int64_t>(n, k + 20), [&](const CaseEval& e) {
      benchmark::DoNotOptimize(e.cmp);
      ++cases;
    });
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(cases));
}
BENCHMARK(BM_CaseKernel)->Arg(6)->Arg(8)->Arg(10);

static void BM_ComputeN(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(compute_N(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ComputeN)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_VerifyDegree(benchmark::State& state)
{
  VerifyOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(verify_degree(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_VerifyDegree)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_OracleHf(benchmark::State& state)
{
  OracleQuery q;
  q.n = state.range(0);
  q.profile = DegreeProfile({2, 3, 4});
  q.d = static_cast<int>(state.range(1));
  q.seeds = 1;
  for (auto _ : state) benchmark::DoNotOptimize(random_ideal_hf(q));
}
BENCHMARK(BM_OracleHf)->Args({3, 8})->Args({4, 10})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
