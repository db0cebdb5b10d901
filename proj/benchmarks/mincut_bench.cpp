#include <benchmark/benchmark.h>

#include "wellconn/gadgets.hpp"
#include "wellconn/mincut.hpp"

using namespace wellconn;

namespace {

void BM_MinCutGnp(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto g = generate(GadgetSpec::random_gnp(n, 12.0 / n, 3)).graph;
  // The sparse samples are not always connected; use the largest component.
  const auto parts = connected_components(g);
  const auto* largest = &parts.front();
  for (const auto& p : parts)
    if (p.size() > largest->size()) largest = &p;
  const auto piece = induced_subgraph(g, *largest, Labels::Drop).graph;
  for (auto _ : state) benchmark::DoNotOptimize(global_min_cut(piece).value);
  state.counters["nodes"] = piece.n();
  state.counters["edges"] = static_cast<double>(piece.m());
}
BENCHMARK(BM_MinCutGnp)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_MinCutCliqueRing(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto g = generate(GadgetSpec::clique_ring(k, 20, 3)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(global_min_cut(g).value);
  state.counters["nodes"] = g.n();
}
BENCHMARK(BM_MinCutCliqueRing)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_BruteForceMinCut(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto g = generate(GadgetSpec::clique_ring(n / 4, 4, 1)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_cut(g).value);
}
BENCHMARK(BM_BruteForceMinCut)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
