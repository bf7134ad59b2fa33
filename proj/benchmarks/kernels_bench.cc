// Copyright 2026 The BigClam Speedup Authors.
//
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

#include <map>
#include <random>

#include "bigclam/bigclam.h"

namespace bigclam {
namespace {

SparseRow RandomRow(std::mt19937_64& rng, std::size_t support, std::size_t communities) {
  std::vector<SparseEntry> entries;
  std::uniform_int_distribution<CommunityId> pick(0, communities - 1);
  std::uniform_real_distribution<double> w(0.01, 1.0);
  for (std::size_t i = 0; i < support; ++i) entries.push_back({pick(rng), w(rng)});
  return SparseRow::FromEntries(std::move(entries));
}

void BM_Dot(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto a = RandomRow(rng, state.range(0), 4000);
  auto b = RandomRow(rng, state.range(1), 4000);
  for (auto _ : state) benchmark::DoNotOptimize(Dot(a, b));
}
BENCHMARK(BM_Dot)->Args({3, 3})->Args({3, 100})->Args({100, 100})->Args({500, 500});

struct Fixture {
  Graph graph;
  AffiliationMatrix matrix;
};

const Fixture& Planted(std::size_t nodes) {
  static std::map<std::size_t, Fixture> cache;
  auto it = cache.find(nodes);
  if (it != cache.end()) return it->second;
  PlantSpec spec{.node_count = nodes, .community_count = nodes / 30,
                 .membership_prob = 60.0 / nodes, .background_eps = 1.0 / nodes,
                 .rng_seed = 3};
  auto model = PlantCover(spec);
  Graph g = GenerateGraph(model.affiliations, spec.background_eps, 4);
  auto init = InitAffiliations(g, LocallyMinimalNeighborhoods(g), spec.community_count, 5);
  return cache.emplace(nodes, Fixture{std::move(g), std::move(init)}).first->second;
}

void BM_NeighborSum(benchmark::State& state) {
  const auto& f = Planted(state.range(0));
  NodeId u = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.matrix.NeighborSum(f.graph, u));
    u = (u + 1) % f.graph.node_count();
  }
}
BENCHMARK(BM_NeighborSum)->Arg(1000)->Arg(3000);

void BM_Conductance(benchmark::State& state) {
  const auto& f = Planted(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(LocallyMinimalNeighborhoods(f.graph, state.range(1)));
  }
  state.SetItemsProcessed(state.iterations() * f.graph.node_count());
}
BENCHMARK(BM_Conductance)->Args({1000, 1})->Args({3000, 1})->Args({3000, 4})->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_GradientEpoch(benchmark::State& state) {
  const auto& f = Planted(state.range(0));
  GaConfig cfg;
  cfg.mode = state.range(1) > 1 ? GaMode::kParallel : GaMode::kSerial;
  cfg.workers = state.range(1);
  AffiliationMatrix m = f.matrix;
  int epoch = 0;
  for (auto _ : state) RunEpoch(m, f.graph, cfg, epoch++);
  state.SetItemsProcessed(state.iterations() * f.graph.node_count());
}
BENCHMARK(BM_GradientEpoch)->Args({1000, 1})->Args({3000, 1})->Args({3000, 4})->UseRealTime()
    ->Unit(benchmark::kMillisecond);

const AffiliationMatrix& CaMatrix() {
  static const AffiliationMatrix m = RandomAffiliations(20000, 400, 3.0, 0.01, 1.0, 9);
  return m;
}

// range(0): workers (0 = serial), range(1): 0 faithful, 1 transposed.
void BM_CommunityAssociation(benchmark::State& state) {
  const auto& m = CaMatrix();
  CaOptions opts;
  opts.impl = state.range(1) ? CaImpl::kTransposed : CaImpl::kFaithful;
  opts.workers = std::max<int>(1, state.range(0));
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(ExtractSerial(m, 0.5, opts));
    } else {
      benchmark::DoNotOptimize(ExtractParallel(m, 0.5, opts));
    }
  }
  state.SetItemsProcessed(state.iterations() * m.node_count() * m.community_count());
}
BENCHMARK(BM_CommunityAssociation)
    ->ArgNames({"workers", "transposed"})
    ->Args({0, 0})->Args({1, 0})->Args({2, 0})->Args({4, 0})->Args({8, 0})
    ->Args({0, 1})->Args({4, 1})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace
}  // namespace bigclam

BENCHMARK_MAIN();
