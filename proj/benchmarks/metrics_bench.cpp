#include <benchmark/benchmark.h>

#include <vector>

#include "wellconn/gadgets.hpp"
#include "wellconn/metrics.hpp"

using namespace wellconn;

namespace {

Clustering random_clustering(NodeId n, std::uint64_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> labels(n);
  for (auto& l : labels) l = rng.below(k);
  return Clustering::from_labels(labels);
}

void BM_Ari(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto a = random_clustering(n, 100, 1), b = random_clustering(n, 120, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ari(a, b));
}
BENCHMARK(BM_Ari)->Range(1 << 10, 1 << 20);

void BM_Nmi(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto a = random_clustering(n, 100, 1), b = random_clustering(n, 120, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nmi(a, b));
}
BENCHMARK(BM_Nmi)->Range(1 << 10, 1 << 20);

void BM_TableCountExact(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const auto a = random_clustering(n, 3, 1), b = random_clustering(n, 3, 2);
  const auto t = contingency(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(log_table_count_exact(t.row_sums, t.col_sums));
}
BENCHMARK(BM_TableCountExact)->Arg(20)->Arg(40)->Arg(80);

void BM_TableCountApprox(benchmark::State& state) {
  const auto a = random_clustering(100'000, 50, 1), b = random_clustering(100'000, 60, 2);
  const auto t = contingency(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(log_table_count_approx(t.row_sums, t.col_sums));
}
BENCHMARK(BM_TableCountApprox);

}  // namespace
