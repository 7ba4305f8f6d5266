#include <benchmark/benchmark.h>

#include <omitlab/constructions.hpp>
#include <omitlab/processes.hpp>
#include <omitlab/regular_linear.hpp>

using namespace omitlab;

static void BM_Greedy(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Hypergraph h = random_uniform(n, 3, 3 * n, 7);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(greedy_independent_set(h, seed++));
}
BENCHMARK(BM_Greedy)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_RegularLinear(benchmark::State& st) {
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(regular_linear(12, 3, 3, seed++));
}
BENCHMARK(BM_RegularLinear)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& st) {
  const Hypergraph h = random_omitting_system(40, static_cast<std::size_t>(st.range(0)), 2, 800, 8);
  for (auto _ : st) benchmark::DoNotOptimize(decompose(h, 2, 2));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Deletion(benchmark::State& st) {
  const std::vector<Hypergraph> family{random_omitting_system(200, 4, 2, 4000, 9)};
  for (auto _ : st) benchmark::DoNotOptimize(deletion_lower_bound(family, deletion_probability(200, 2), 50, 1));
}
BENCHMARK(BM_Deletion)->Unit(benchmark::kMillisecond);
