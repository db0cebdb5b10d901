#include <benchmark/benchmark.h>

#include "wellconn/gadgets.hpp"
#include "wellconn/treatments.hpp"

using namespace wellconn;

namespace {

const Generated& network() {
  static const Generated gen = generate(GadgetSpec::planted_partition_lite(50'000, 200, 5'000, 9, 1, 7));
  return gen;
}

void BM_Cc(benchmark::State& state) {
  const auto& gen = network();
  for (auto _ : state) benchmark::DoNotOptimize(cc_treatment(gen.graph, gen.truth).clustering.size());
}
BENCHMARK(BM_Cc)->Unit(benchmark::kMillisecond);

// Argument: 1 follows peeling runs incrementally, 0 recomputes every cut.
void BM_Wcc(benchmark::State& state) {
  const auto& gen = network();
  TreatmentOptions opt;
  opt.incremental_peeling = state.range(0) != 0;
  const auto t = ThresholdSpec::parse("1log10");
  std::size_t cuts = 0;
  for (auto _ : state) cuts = wcc_treatment(gen.graph, gen.truth, t, opt).trace.cuts_performed;
  state.counters["cuts"] = static_cast<double>(cuts);
}
BENCHMARK(BM_Wcc)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_CmComponents(benchmark::State& state) {
  const auto& gen = network();
  const ComponentsClusterer components;
  const auto t = ThresholdSpec::parse("1log10");
  for (auto _ : state) benchmark::DoNotOptimize(cm_treatment(gen.graph, gen.truth, t, components).clustering.size());
}
BENCHMARK(BM_CmComponents)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
