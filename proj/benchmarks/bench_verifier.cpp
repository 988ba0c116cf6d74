#include <benchmark/benchmark.h>

#include "subsum/verifier.hpp"

using namespace subsum;

static void BM_SubsetSumBoundCyclic(benchmark::State& state) {
  const auto g = AbelianGroup::cyclic(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_subset_sum_bound(g));
}
BENCHMARK(BM_SubsetSumBoundCyclic)->Arg(16)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_SubsetSumBoundSymmetry(benchmark::State& state) {
  const auto g = AbelianGroup::cyclic(20);
  for (auto _ : state) benchmark::DoNotOptimize(verify_subset_sum_bound(g, 5, VerifyOptions{.symmetry = true}));
}
BENCHMARK(BM_SubsetSumBoundSymmetry)->Unit(benchmark::kMillisecond);

static void BM_Lemma2Search(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const VerifyOptions opt{.symmetry = state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(search_lemma2_counterexamples(m, false, opt));
}
BENCHMARK(BM_Lemma2Search)->Args({18, 0})->Args({18, 1})->Args({22, 0})->Args({22, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_Lemma2Jobs(benchmark::State& state) {
  const VerifyOptions opt{.jobs = static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search_lemma2_counterexamples(20, false, opt));
}
BENCHMARK(BM_Lemma2Jobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CriticalNumber(benchmark::State& state) {
  const auto g = parse_group_spec(state.range(0) == 0 ? "Z14" : "Z2xZ8");
  for (auto _ : state) benchmark::DoNotOptimize(critical_number(g));
}
BENCHMARK(BM_CriticalNumber)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ThreeFoldCover(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_three_fold_cover(m));
}
BENCHMARK(BM_ThreeFoldCover)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
