#include <benchmark/benchmark.h>

#include "curvecount/clt.hpp"
#include "curvecount/intersection.hpp"
#include "curvecount/markov.hpp"
#include "curvecount/moments.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace cc = curvecount;

static void BM_SelfIntersection(benchmark::State& state) {
  const auto surface = cc::preset_surface("punctured_torus");
  const auto n = static_cast<std::size_t>(state.range(0));
  cc::StreamRng rng(7, 0);
  const auto w = cc::sample_joinable(surface, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cc::self_intersection_count(surface, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelfIntersection)->RangeMultiplier(2)->Range(25, 400)->Complexity();

static void BM_Definitional(benchmark::State& state) {
  const auto surface = cc::preset_surface("punctured_torus");
  const auto n = static_cast<std::size_t>(state.range(0));
  cc::StreamRng rng(7, 0);
  const auto w = cc::sample_joinable(surface, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cc::self_intersection_definitional(surface, cc::JoinableWord(surface, w)));
}
BENCHMARK(BM_Definitional)->Arg(25)->Arg(50);

static void BM_NecklaceSample(benchmark::State& state) {
  const auto surface = cc::preset_surface("punctured_torus");
  cc::StreamRng rng(11, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::sample_necklace(surface, 200, rng, cc::SampleMode::kNecklaceExact));
  }
}
BENCHMARK(BM_NecklaceSample);

static void BM_ExhaustiveDistribution(benchmark::State& state) {
  const auto surface = cc::preset_surface("punctured_torus");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::exhaustive_distribution(surface, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExhaustiveDistribution)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_LimitConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cc::limit_constants(4, 50));
}
BENCHMARK(BM_LimitConstants)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
