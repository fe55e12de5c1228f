// Copyright 2026 The wlspectra Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <random>

#include "wlspectra/kwl.h"
#include "wlspectra/spectral.h"
#include "wlspectra/synthetic_benchmark.h"
#include "wlspectra/wl.h"

namespace wlspectra {
namespace {

Graph Random(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

void BM_JacobiLaplacian(benchmark::State& state) {
  const LaplacianMatrix l(Random(static_cast<int>(state.range(0)), 0.3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(JacobiEigen(l.matrix()));
}
BENCHMARK(BM_JacobiLaplacian)->RangeMultiplier(2)->Range(8, 64);

void BM_OneWl(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 4.0 / state.range(0), 2);
  const ConstantPreColoring pre;
  for (auto _ : state) benchmark::DoNotOptimize(RefineToConvergence(g, pre));
}
BENCHMARK(BM_OneWl)->RangeMultiplier(4)->Range(16, 1024);

void BM_Kwl(benchmark::State& state) {
  const Graph g1 = MakeReferenceGraph(ReferenceGraph::kDecalin);
  const Graph g2 = MakeReferenceGraph(ReferenceGraph::kBicyclopentyl);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(KwlRefineToConvergence(g1, g2, k));
}
BENCHMARK(BM_Kwl)->Arg(2)->Arg(3);

void BM_SpectralFeatures(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.3, 3);
  const SpectralConfig cfg = SpectralConfig::Parse("(-1,1,10,MMM)");
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSpectralFeatures(g, cfg));
}
BENCHMARK(BM_SpectralFeatures)->RangeMultiplier(2)->Range(8, 32);

void BM_ReducedOrderDiagonal(benchmark::State& state) {
  const Spectrum s = Decompose(Random(32, 0.3, 4));
  SpectralConfig cfg = SpectralConfig::Parse("(-1,1,10,none)");
  cfg.truncation = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ApproximateHeatDiagonal(s, cfg, 1000));
}
BENCHMARK(BM_ReducedOrderDiagonal)->Arg(4)->Arg(16)->Arg(32);

void BM_CospectralSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(FindCospectralWlDistinguishable());
}
BENCHMARK(BM_CospectralSearch)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace wlspectra

BENCHMARK_MAIN();
