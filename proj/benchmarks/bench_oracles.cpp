#include <benchmark/benchmark.h>

#include <omitlab/constructions.hpp>
#include <omitlab/oracles.hpp>

using namespace omitlab;

static void BM_MaxIndependentSet(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Hypergraph h = random_uniform(n, 3, 2 * n, 3);
  for (auto _ : st) benchmark::DoNotOptimize(max_independent_set_exact(h));
}
BENCHMARK(BM_MaxIndependentSet)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_MaxIndependentSetL(benchmark::State& st) {
  const Hypergraph h = l_construction(static_cast<std::size_t>(st.range(0)), 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(max_independent_set_exact(h));
}
BENCHMARK(BM_MaxIndependentSetL)->Arg(3)->Arg(5)->Arg(8);

static void BM_MatchingNumber(benchmark::State& st) {
  const Hypergraph h = random_uniform(static_cast<std::size_t>(st.range(0)), 3, st.range(0), 4);
  for (auto _ : st) benchmark::DoNotOptimize(matching_number_exact(h));
}
BENCHMARK(BM_MatchingNumber)->Arg(15)->Arg(24)->Arg(33);

static void BM_OmittingCheck(benchmark::State& st) {
  const Hypergraph h = random_omitting_system(static_cast<std::size_t>(st.range(0)), 4, 2, 20 * st.range(0), 5);
  for (auto _ : st) benchmark::DoNotOptimize(omitting_check(h, 2));
}
BENCHMARK(BM_OmittingCheck)->Arg(50)->Arg(200)->Arg(800);

static void BM_ContainsSunflower(benchmark::State& st) {
  const Hypergraph h = random_uniform(30, 4, static_cast<std::size_t>(st.range(0)), 6);
  for (auto _ : st) benchmark::DoNotOptimize(contains_sunflower(h, 1, 4));
}
BENCHMARK(BM_ContainsSunflower)->Arg(20)->Arg(60)->Arg(120);

static void BM_ContainsFan(benchmark::State& st) {
  const Hypergraph h = l_construction(static_cast<std::size_t>(st.range(0)), 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(contains_fan(h));
}
BENCHMARK(BM_ContainsFan)->Arg(3)->Arg(6)->Arg(10);
