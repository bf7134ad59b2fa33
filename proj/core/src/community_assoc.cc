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

#include "bigclam/community_assoc.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>

#include "bigclam/error.h"

namespace bigclam {

namespace {

void CheckDelta(double delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
}

std::vector<CommunityId> ScanOrder(const AffiliationMatrix& m, const CaOptions& options) {
  std::vector<CommunityId> order(m.community_count());
  std::iota(order.begin(), order.end(), CommunityId{0});
  if (options.order_by_strength) {
    auto strength = CommunityStrengths(m);
    std::stable_sort(order.begin(), order.end(), [&](CommunityId a, CommunityId b) {
      return strength[a] > strength[b];
    });
  }
  return order;
}

// Lines 3-8 of the matrix scan: one community, every node, private list.
Community ScanCommunity(const AffiliationMatrix& m, CommunityId c, double delta,
                        std::uint64_t& probes) {
  Community members;
  const auto n = static_cast<NodeId>(m.node_count());
  for (NodeId u = 0; u < n; ++u) {
    ++probes;
    if (m.Row(u).Get(c) >= delta) members.push_back(u);
  }
  return members;
}

// Column view of the entries >= delta, built in one pass over the non-zeros.
std::vector<Community> Columns(const AffiliationMatrix& m, double delta, std::uint64_t& probes) {
  std::vector<Community> columns(m.community_count());
  for (NodeId u = 0; u < m.node_count(); ++u) {
    for (const auto& e : m.Row(u).entries()) {
      ++probes;
      if (e.value >= delta) columns[e.community].push_back(u);
    }
  }
  return columns;
}

}  // namespace

double AffiliationThreshold(std::uint64_t node_count, std::uint64_t edge_count) {
  if (node_count < 2 || edge_count < 1) {
    throw Error(ErrorCode::kDegenerateGraph, "need |V| >= 2 and |E| >= 1");
  }
  const double v = static_cast<double>(node_count);
  const double eps = 2.0 * static_cast<double>(edge_count) / (v * (v - 1.0));
  if (!(eps < 1.0)) {
    throw Error(ErrorCode::kDegenerateGraph, "background edge probability is not below 1");
  }
  return std::sqrt(-std::log1p(-eps));
}

std::vector<double> CommunityStrengths(const AffiliationMatrix& m) {
  auto sum = m.sum_f();
  return {sum.begin(), sum.end()};
}

Cover ExtractSerial(const AffiliationMatrix& m, double delta, const CaOptions& options,
                    CaCounters* counters) {
  CheckDelta(delta);
  std::uint64_t probes = 0;
  Cover cover;
  if (options.impl == CaImpl::kFaithful) {
    for (CommunityId c : ScanOrder(m, options)) {
      Community members = ScanCommunity(m, c, delta, probes);
      if (members.size() >= options.min_members) cover.push_back(std::move(members));
    }
  } else {
    auto columns = Columns(m, delta, probes);
    for (CommunityId c : ScanOrder(m, options)) {
      if (columns[c].size() >= options.min_members) cover.push_back(std::move(columns[c]));
    }
  }
  if (counters != nullptr) counters->probes += probes;
  return cover;
}

Cover ExtractParallel(const AffiliationMatrix& m, double delta, const CaOptions& options,
                      CaCounters* counters) {
  CheckDelta(delta);
  const auto order = ScanOrder(m, options);
  const auto count = static_cast<std::int64_t>(order.size());
  const int workers = std::max(options.workers, 1);
  std::uint64_t probes = 0;
  Cover cover;
  std::mutex cover_mutex;

  if (options.impl == CaImpl::kFaithful) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) reduction(+ : probes)
    for (std::int64_t i = 0; i < count; ++i) {
      Community members = ScanCommunity(m, order[i], delta, probes);
      if (members.size() >= options.min_members) {
        std::lock_guard<std::mutex> lock(cover_mutex);
        cover.push_back(std::move(members));
      }
    }
  } else {
    auto columns = Columns(m, delta, probes);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i) {
      Community& members = columns[order[i]];
      if (members.size() >= options.min_members) {
        std::lock_guard<std::mutex> lock(cover_mutex);
        cover.push_back(std::move(members));
      }
    }
  }
  if (counters != nullptr) counters->probes += probes;
  return cover;
}

}  // namespace bigclam
