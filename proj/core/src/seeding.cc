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

#include "bigclam/seeding.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "bigclam/error.h"

namespace bigclam {

double NeighborhoodConductance(const Graph& graph, NodeId u) {
  auto nbrs = graph.Neighbors(u);
  auto in_set = [&](NodeId x) {
    return x == u || std::binary_search(nbrs.begin(), nbrs.end(), x);
  };
  std::uint64_t volume = nbrs.size();
  std::uint64_t cut = 0;
  for (NodeId v : nbrs) {
    auto second = graph.Neighbors(v);
    volume += second.size();
    for (NodeId w : second) {
      if (!in_set(w)) ++cut;
    }
  }
  const std::uint64_t total = 2 * graph.edge_count();
  const std::uint64_t denom = std::min(volume, total - volume);
  if (denom == 0) return 0.0;
  return static_cast<double>(cut) / static_cast<double>(denom);
}

SeedSet LocallyMinimalNeighborhoods(const Graph& graph, int workers) {
  const auto n = static_cast<std::int64_t>(graph.node_count());
  std::vector<double> phi(graph.node_count());
#pragma omp parallel for schedule(dynamic, 256) num_threads(std::max(workers, 1))
  for (std::int64_t u = 0; u < n; ++u) {
    phi[u] = NeighborhoodConductance(graph, static_cast<NodeId>(u));
  }

  SeedSet seeds;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    auto nbrs = graph.Neighbors(u);
    if (nbrs.empty()) continue;
    bool minimal = std::all_of(nbrs.begin(), nbrs.end(),
                               [&](NodeId v) { return phi[u] < phi[v]; });
    if (minimal) seeds.push_back({u, phi[u]});
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    return a.conductance != b.conductance ? a.conductance < b.conductance : a.node < b.node;
  });
  return seeds;
}

AffiliationMatrix InitAffiliations(const Graph& graph, const SeedSet& seeds,
                                   std::size_t community_count, std::uint64_t rng_seed) {
  if (community_count < 1) {
    throw Error(ErrorCode::kInvalidCommunityCount, "community count must be >= 1");
  }
  const std::size_t n = graph.node_count();
  AffiliationMatrix m(n, community_count);
  std::mt19937_64 rng(rng_seed);

  auto assign_neighborhood = [&](NodeId center, CommunityId c) {
    m.Set(center, c, 1.0);
    for (NodeId v : graph.Neighbors(center)) m.Set(v, c, 1.0);
  };

  const std::size_t from_seeds = std::min(seeds.size(), community_count);
  for (std::size_t c = 0; c < from_seeds; ++c) {
    assign_neighborhood(seeds[c].node, static_cast<CommunityId>(c));
  }

  if (from_seeds < community_count) {
    std::vector<char> used(n, 0);
    for (const auto& s : seeds) used[s.node] = 1;
    std::vector<NodeId> pool;
    pool.reserve(n);
    for (NodeId u = 0; u < n; ++u) {
      if (!used[u]) pool.push_back(u);
    }
    // Partial Fisher-Yates: draws without replacement in draw order.
    for (std::size_t c = from_seeds; c < community_count && !pool.empty(); ++c) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::size_t i = pick(rng);
      std::swap(pool[i], pool.back());
      NodeId center = pool.back();
      pool.pop_back();
      assign_neighborhood(center, static_cast<CommunityId>(c));
    }
  }

  std::uniform_int_distribution<CommunityId> any_community(
      0, static_cast<CommunityId>(community_count - 1));
  for (NodeId u = 0; u < n; ++u) {
    if (m.Row(u).empty()) m.Set(u, any_community(rng), 1.0);
  }
  return m;
}

}  // namespace bigclam
