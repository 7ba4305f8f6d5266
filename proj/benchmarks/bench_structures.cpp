#include <benchmark/benchmark.h>

#include <omitlab/bipartite.hpp>
#include <omitlab/constructions.hpp>
#include <omitlab/hypergraph_ops.hpp>
#include <omitlab/omitting_system.hpp>
#include <omitlab/spectral.hpp>

using namespace omitlab;

static void BM_DegreeProfile(benchmark::State& st) {
  const Hypergraph h = random_uniform(static_cast<std::size_t>(st.range(0)), 4, 4 * st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(degree_profile(h));
}
BENCHMARK(BM_DegreeProfile)->Arg(100)->Arg(400)->Arg(1600);

static void BM_CycleCensus(benchmark::State& st) {
  const Hypergraph h = random_uniform(static_cast<std::size_t>(st.range(0)), 3, 3 * st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(cycle_census(h));
}
BENCHMARK(BM_CycleCensus)->Arg(100)->Arg(400)->Arg(1600);

static void BM_PolynomialGraph(benchmark::State& st) {
  const auto q = static_cast<std::uint32_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_polynomial_graph(q, 2));
}
BENCHMARK(BM_PolynomialGraph)->Arg(7)->Arg(31)->Arg(101);

static void BM_Spectrum(benchmark::State& st) {
  const BipartiteGraph g = build_polynomial_graph(static_cast<std::uint32_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(g));
  st.SetLabel("dim " + std::to_string(g.left_count() + g.right_count()));
}
BENCHMARK(BM_Spectrum)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_OmittingSystem(benchmark::State& st) {
  OmittingSystemOptions o;
  o.q = smallest_feasible_prime(2, 3);
  std::uint64_t seed = 0;
  for (auto _ : st) {
    o.seed = seed++;
    benchmark::DoNotOptimize(omitting_system(o));
  }
}
BENCHMARK(BM_OmittingSystem)->Unit(benchmark::kMillisecond);
