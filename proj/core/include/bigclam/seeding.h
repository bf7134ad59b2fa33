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

#ifndef BIGCLAM_SEEDING_H_
#define BIGCLAM_SEEDING_H_

#include <cstdint>
#include <vector>

#include "bigclam/graph.h"
#include "bigclam/sparse_affiliation.h"

namespace bigclam {

struct Seed {
  NodeId node;
  double conductance;

  bool operator==(const Seed&) const = default;
};

// Seeds ordered by ascending conductance, ties by ascending node ID.
using SeedSet = std::vector<Seed>;

// Conductance cut(S, ~S) / min(vol(S), vol(~S)) of S = {u} + neighbors(u).
// Returns 0 when the smaller volume is zero. Throws kNodeOutOfRange.
double NeighborhoodConductance(const Graph& graph, NodeId u);

// Nodes whose neighborhood conductance is strictly below that of every
// neighbor's neighborhood. Isolated nodes are never seeds.
SeedSet LocallyMinimalNeighborhoods(const Graph& graph, int workers = 1);

// Builds the 0/1 initial affiliation matrix. The first min(|seeds|, |C|)
// seeds each define one community over their neighborhood. Remaining
// communities use the neighborhoods of nodes drawn uniformly without
// replacement (excluding nodes already used as seeds), and any node left
// without an affiliation joins one uniformly drawn community. The RNG is
// consulted only on those two fallback paths. Throws kInvalidCommunityCount
// when community_count < 1.
AffiliationMatrix InitAffiliations(const Graph& graph, const SeedSet& seeds,
                                   std::size_t community_count, std::uint64_t rng_seed);

}  // namespace bigclam

#endif  // BIGCLAM_SEEDING_H_
