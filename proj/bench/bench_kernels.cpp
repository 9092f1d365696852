// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "linkscale/noise.hpp"
#include "linkscale/predictors.hpp"
#include "linkscale/rng.hpp"
#include "linkscale/scale_eval.hpp"
#include "linkscale/synth.hpp"

using namespace linkscale;

namespace {

const Graph& seed250() {
  static const Graph g = [] {
    auto rng = make_engine(1, Stream::SeedGraph);
    return seed_graph(ErdosRenyi{250, 0.05}, rng);
  }();
  return g;
}

const GraphSequence& truth() {
  static const GraphSequence seq = generate_sequence(GenParams{});
  return seq;
}

const GraphSequence& noisy() {
  static const GraphSequence seq = [] {
    NoiseParams p;
    p.mu = 20;
    return apply_noise(truth(), p);
  }();
  return seq;
}

PredictorKind kind_of(const benchmark::State& state) {
  return static_cast<PredictorKind>(state.range(0));
}

void BM_ScoreNonEdgesReference(benchmark::State& state) {
  const auto cfg = PredictorConfig::of(kind_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(reference::score_all_non_edges(seed250(), cfg));
  state.SetLabel(std::string(to_string(cfg.kind)));
}

void BM_ScoreNonEdgesBatch(benchmark::State& state) {
  const auto cfg = PredictorConfig::of(kind_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(score_all_non_edges(seed250(), cfg));
  state.SetLabel(std::string(to_string(cfg.kind)));
}

void BM_ApplyNoiseReference(benchmark::State& state) {
  NoiseParams p;
  for (auto _ : state) benchmark::DoNotOptimize(reference::apply_noise(truth(), p));
}

void BM_ApplyNoise(benchmark::State& state) {
  NoiseParams p;
  for (auto _ : state) benchmark::DoNotOptimize(apply_noise(truth(), p));
}

void BM_SweepReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::sweep(noisy(), PredictorConfig{}));
}

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(noisy(), PredictorConfig{}));
}

}  // namespace

BENCHMARK(BM_ScoreNonEdgesReference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreNonEdgesBatch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyNoiseReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyNoise)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
