#include <benchmark/benchmark.h>

#include <random>

#include "subsum/group.hpp"
#include "subsum/subset.hpp"
#include "subsum/sumset.hpp"

using namespace subsum;

namespace {

GroupSubset random_subset(const AbelianGroup& g, std::uint32_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GroupSubset s(g);
  while (s.size() < k) s.insert(static_cast<std::uint32_t>(rng() % g.order()));
  return s;
}

AbelianGroup group_for(std::int64_t arg) {
  switch (arg) {
    case 0: return parse_group_spec("Z1024");
    case 1: return parse_group_spec("Z2xZ2xZ256");
    default: return parse_group_spec("Z4096");
  }
}

}  // namespace

static void BM_Translate(benchmark::State& state) {
  const auto g = group_for(state.range(0));
  const auto s = random_subset(g, g.order() / 3, 1);
  std::vector<std::uint64_t> out(g.words());
  std::uint32_t by = 1;
  for (auto _ : state) {
    g.translate(s.words(), by, out);
    by = (by * 7 + 3) % g.order();
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Translate)->Arg(0)->Arg(1)->Arg(2);

static void BM_Sigma(benchmark::State& state) {
  const auto g = group_for(state.range(0));
  const auto a = random_subset(g, 24, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(g, a));
}
BENCHMARK(BM_Sigma)->Arg(0)->Arg(1)->Arg(2);

static void BM_HHat(benchmark::State& state) {
  const auto g = parse_group_spec("Z1024");
  const auto a = random_subset(g, 24, 3);
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_hat(g, a, h));
}
BENCHMARK(BM_HHat)->Arg(2)->Arg(6)->Arg(12);

static void BM_NaiveSigma(benchmark::State& state) {
  const auto g = parse_group_spec("Z1024");
  const auto a = random_subset(g, static_cast<std::uint32_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(naive_subset_sums(g, a, Sigma{}));
}
BENCHMARK(BM_NaiveSigma)->Arg(8)->Arg(12)->Arg(16);
