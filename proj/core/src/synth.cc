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

#include "bigclam/synth.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bigclam/error.h"

namespace bigclam {

PlantedModel PlantCover(const PlantSpec& spec) {
  if (spec.node_count == 0 || spec.community_count == 0 ||
      !(spec.membership_prob >= 0.0 && spec.membership_prob <= 1.0) ||
      !(spec.weight_lo > 0.0 && spec.weight_lo <= spec.weight_hi &&
        spec.weight_hi <= kMaxWeight) ||
      !(spec.background_eps >= 0.0 && spec.background_eps < 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "invalid plant specification");
  }
  std::mt19937_64 rng(spec.rng_seed);
  std::bernoulli_distribution member(spec.membership_prob);
  std::uniform_real_distribution<double> weight(spec.weight_lo, spec.weight_hi);

  PlantedModel model{AffiliationMatrix(spec.node_count, spec.community_count), {}};
  std::vector<Community> columns(spec.community_count);
  for (NodeId u = 0; u < spec.node_count; ++u) {
    for (CommunityId c = 0; c < spec.community_count; ++c) {
      if (!member(rng)) continue;
      model.affiliations.Set(u, c, weight(rng));
      columns[c].push_back(u);
    }
  }
  for (auto& column : columns) {
    if (!column.empty()) model.truth.push_back(std::move(column));
  }
  return model;
}

Graph GenerateGraph(const AffiliationMatrix& affiliations, double background_eps,
                    std::uint64_t rng_seed) {
  const std::size_t n = affiliations.node_count();
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      double x = Dot(affiliations.Row(u), affiliations.Row(v));
      double p = 1.0 - (1.0 - background_eps) * std::exp(-x);
      if (unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

AffiliationMatrix RandomAffiliations(std::size_t node_count, std::size_t community_count,
                                     double mean_support, double weight_lo, double weight_hi,
                                     std::uint64_t rng_seed) {
  if (community_count == 0 || !(mean_support >= 1.0) || !(weight_lo > 0.0) ||
      !(weight_lo <= weight_hi)) {
    throw Error(ErrorCode::kInvalidSpec, "invalid random affiliation parameters");
  }
  std::mt19937_64 rng(rng_seed);
  std::poisson_distribution<std::size_t> extra(mean_support - 1.0);
  std::uniform_int_distribution<CommunityId> pick(0, static_cast<CommunityId>(community_count - 1));
  std::uniform_real_distribution<double> weight(weight_lo, weight_hi);
  AffiliationMatrix m(node_count, community_count);
  for (NodeId u = 0; u < node_count; ++u) {
    std::size_t k = std::min(community_count, 1 + (mean_support > 1.0 ? extra(rng) : 0));
    std::vector<SparseEntry> entries;
    while (entries.size() < k) {
      CommunityId c = pick(rng);
      bool seen = std::any_of(entries.begin(), entries.end(),
                              [c](const SparseEntry& e) { return e.community == c; });
      if (!seen) entries.push_back({c, weight(rng)});
    }
    m.ReplaceRow(u, SparseRow::FromEntries(std::move(entries)));
  }
  return m;
}

double SetF1(const Community& a, const Community& b) {
  Community sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<std::int64_t> shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
  if (shared.empty()) return 0.0;
  const double overlap = static_cast<double>(shared.size());
  return 2.0 * overlap / static_cast<double>(sa.size() + sb.size());
}

namespace {

double MeanBestMatch(const Cover& from, const Cover& to) {
  double total = 0.0;
  for (const auto& a : from) {
    double best = 0.0;
    for (const auto& b : to) best = std::max(best, SetF1(a, b));
    total += best;
  }
  return total / static_cast<double>(from.size());
}

}  // namespace

double AverageF1(const Cover& detected, const Cover& truth) {
  if (detected.empty() || truth.empty()) {
    throw Error(ErrorCode::kEmptyCover, "average F1 needs two non-empty covers");
  }
  return 0.5 * (MeanBestMatch(truth, detected) + MeanBestMatch(detected, truth));
}

}  // namespace bigclam
