#include <benchmark/benchmark.h>

#include <vector>

#include "domcrit/canonical.hpp"
#include "domcrit/constructions.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/enumerate.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/harness.hpp"
#include "domcrit/matching.hpp"
#include "domcrit/structure.hpp"

using namespace domcrit;

namespace {

const std::vector<Graph>& pool(int order, int count) {
  static std::vector<Graph> cache;
  static int cached_order = -1;
  if (cached_order != order) {
    cache = sampled_corpus(count, {order}, 99).graphs;
    cached_order = order;
  }
  return cache;
}

void BM_canonical_form(benchmark::State& state) {
  const auto& graphs = pool(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
  }
}

void BM_domination_number(benchmark::State& state) {
  const auto& graphs = pool(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(domination_gamma(graphs[i++ % graphs.size()]));
  }
}

void BM_maximum_matching(benchmark::State& state) {
  const auto& graphs = pool(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_matching(graphs[i++ % graphs.size()]).nu);
  }
}

void BM_star_free(benchmark::State& state) {
  const auto& graphs = pool(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_star_free(graphs[i++ % graphs.size()], 5).star_free);
  }
}

void BM_vertex_criticality(benchmark::State& state) {
  Graph g = fig1_nine_vertex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertex_criticality(g).is_vertex_critical);
  }
}

void BM_enumerate_order7(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_graphs(7).size());
  }
}

}  // namespace

BENCHMARK(BM_canonical_form)->Arg(9)->Arg(16);
BENCHMARK(BM_domination_number)->Arg(12)->Arg(16);
BENCHMARK(BM_maximum_matching)->Arg(16)->Arg(32);
BENCHMARK(BM_star_free)->Arg(12)->Arg(20);
BENCHMARK(BM_vertex_criticality);
BENCHMARK(BM_enumerate_order7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
