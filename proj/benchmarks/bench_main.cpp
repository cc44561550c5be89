// Copyright 2026 The Coopl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the rational LP core, flow evaluation, the learners,
// and the sampled core program. Run via ./coopl_benchmarks; not part of the
// ctest suite.

#include <benchmark/benchmark.h>

#include "coopl/coopl.hpp"

namespace {

using namespace coopl;

SampleSet sampled_set(GameClass cls, std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  GameClassSpec spec;
  spec.cls = cls;
  spec.n = n;
  spec.k = 3;
  const Game game = random_game(spec, rng);
  return sample_game(game, CoalitionDistribution(UniformDist{n}), m, rng);
}

void BM_SolveCoverLp(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Rng rng(7);
  GameClassSpec spec;
  spec.cls = GameClass::Wvg;
  spec.n = n;
  const Game game = random_game(spec, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_of_stability_exact(game, n));
  }
}
BENCHMARK(BM_SolveCoverLp)->Arg(8)->Arg(10)->Arg(12);

void BM_PacStabilize(benchmark::State& state) {
  const SampleSet set = sampled_set(GameClass::Wvg, 12, static_cast<std::uint64_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pac_stabilize(set));
  }
}
BENCHMARK(BM_PacStabilize)->Arg(50)->Arg(200);

void BM_MaxFlowEvaluate(benchmark::State& state) {
  Rng rng(13);
  GameClassSpec spec;
  spec.cls = GameClass::Flow;
  spec.n = static_cast<std::uint32_t>(state.range(0));
  spec.k = 3;
  const Game game = random_game(spec, rng);
  const Coalition all = Coalition::full(spec.n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(game, all));
  }
}
BENCHMARK(BM_MaxFlowEvaluate)->Arg(9)->Arg(18);

void BM_LearnTtg(benchmark::State& state) {
  const SampleSet set = sampled_set(GameClass::Ttg, 8, static_cast<std::uint64_t>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn_ttg(set));
  }
}
BENCHMARK(BM_LearnTtg)->Arg(30)->Arg(100);

void BM_LearnWvg(benchmark::State& state) {
  const SampleSet set = sampled_set(GameClass::Wvg, 10, static_cast<std::uint64_t>(state.range(0)), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn_wvg(set));
  }
}
BENCHMARK(BM_LearnWvg)->Arg(40)->Arg(160);

}  // namespace

BENCHMARK_MAIN();
