// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "skewspec/kernels.hpp"
#include "skewspec/products.hpp"

using namespace skewspec;

namespace {

OrientedGraph family_graph(int r) { return generate_family({FamilyBase::K44, r}).graph; }

void BM_GramSerial(benchmark::State& state) {
  const OrientedGraph og = family_graph(static_cast<int>(state.range(0)));
  const IntMatrix s = skew_adjacency(og);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::gram(s));
  state.SetLabel("n=" + std::to_string(og.order()));
}

void BM_GramOmp(benchmark::State& state) {
  const OrientedGraph og = family_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::gram(og));
  state.SetLabel("n=" + std::to_string(og.order()));
}

void BM_ScalarGramSerial(benchmark::State& state) {
  const OrientedGraph og = family_graph(static_cast<int>(state.range(0)));
  const int k = og.graph().regular_degree();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::is_scalar_gram(og, k));
}

void BM_ScalarGramOmp(benchmark::State& state) {
  const OrientedGraph og = family_graph(static_cast<int>(state.range(0)));
  const int k = og.graph().regular_degree();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::is_scalar_gram(og, k));
}

void BM_SearchSerial(benchmark::State& state) {
  const Graph g = named::hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::search_max_orientation(g, kDefaultSearchBudget));
}

void BM_SearchOmp(benchmark::State& state) {
  const Graph g = named::hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::search_max_orientation(g, kDefaultSearchBudget));
}

auto energy_of = [](const OrientedGraph& og) { return skew_spectrum(og).energy(); };

void BM_MapSerial(benchmark::State& state) {
  const Graph g = named::hypercube(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::map_orientations(g, energy_of));
}

void BM_MapOmp(benchmark::State& state) {
  const Graph g = named::hypercube(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::map_orientations(g, energy_of));
}

}  // namespace

BENCHMARK(BM_GramSerial)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GramOmp)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScalarGramSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScalarGramOmp)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SearchSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOmp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
