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

#ifndef BIGCLAM_SYNTH_H_
#define BIGCLAM_SYNTH_H_

#include <cstdint>
#include <utility>

#include "bigclam/cover.h"
#include "bigclam/graph.h"
#include "bigclam/sparse_affiliation.h"

namespace bigclam {

// Planted affiliation model. Every (node, community) pair is a membership
// independently with probability membership_prob; members get a weight
// drawn uniformly from [weight_lo, weight_hi].
struct PlantSpec {
  std::size_t node_count = 0;
  std::size_t community_count = 0;
  double membership_prob = 0.0;
  double weight_lo = 0.6;
  double weight_hi = 1.0;
  double background_eps = 0.0;
  std::uint64_t rng_seed = 0;
};

struct PlantedModel {
  AffiliationMatrix affiliations;
  // Support of `affiliations`, one community per non-empty column, members
  // ascending, in ascending community order.
  Cover truth;
};

// Throws kInvalidSpec.
PlantedModel PlantCover(const PlantSpec& spec);

// Each unordered pair {u, v} becomes an edge independently with probability
// 1 - (1 - background_eps) * exp(-F_u . F_v). Quadratic in |V|.
Graph GenerateGraph(const AffiliationMatrix& affiliations, double background_eps,
                    std::uint64_t rng_seed);

// A matrix shaped like a fitted one at scale, for stage benchmarks: each
// row gets 1 + Poisson(mean_support - 1) distinct communities drawn
// uniformly, with weights uniform in [weight_lo, weight_hi].
AffiliationMatrix RandomAffiliations(std::size_t node_count, std::size_t community_count,
                                     double mean_support, double weight_lo, double weight_hi,
                                     std::uint64_t rng_seed);

// Symmetric average F1: half the mean best-match F1 of truth communities
// against detected ones plus half the reverse. Throws kEmptyCover if either
// cover is empty.
double AverageF1(const Cover& detected, const Cover& truth);

// F1 of two member sets (harmonic mean of precision and recall).
double SetF1(const Community& a, const Community& b);

}  // namespace bigclam

#endif  // BIGCLAM_SYNTH_H_
