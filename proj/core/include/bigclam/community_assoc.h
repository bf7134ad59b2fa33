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

#ifndef BIGCLAM_COMMUNITY_ASSOC_H_
#define BIGCLAM_COMMUNITY_ASSOC_H_

#include <cstdint>
#include <vector>

#include "bigclam/cover.h"
#include "bigclam/sparse_affiliation.h"

namespace bigclam {

enum class CaImpl {
  // For every community, probe F_uc for every node u: exactly |V| * |C|
  // membership probes, each a binary search in the sparse row.
  kFaithful,
  // One pass over the non-zeros builds a column view, then the columns are
  // filtered. Same output, O(nnz) probes.
  kTransposed,
};

struct CaOptions {
  std::size_t min_members = 3;
  // Emit communities in descending total affiliation strength (ties by
  // ascending ID) instead of ascending ID.
  bool order_by_strength = true;
  int workers = 1;
  CaImpl impl = CaImpl::kFaithful;
};

struct CaCounters {
  std::uint64_t probes = 0;
};

// delta = sqrt(-log(1 - eps)) with eps = 2|E| / (|V| (|V| - 1)), the
// background edge probability. Throws kDegenerateGraph unless |V| >= 2,
// |E| >= 1 and eps < 1.
double AffiliationThreshold(std::uint64_t node_count, std::uint64_t edge_count);

// Per-community total strength sum_u F_uc.
std::vector<double> CommunityStrengths(const AffiliationMatrix& m);

// Community c holds every u with F_uc >= delta, ascending; communities with
// fewer than min_members members are dropped. Deterministic output order.
Cover ExtractSerial(const AffiliationMatrix& m, double delta, const CaOptions& options,
                    CaCounters* counters = nullptr);

// Per-community scans run concurrently on options.workers threads. The
// matrix and delta are shared read-only, each member list is private to the
// worker scanning it, and appending a finished list to the shared cover is
// the only operation under mutual exclusion. The outer order therefore
// depends on scheduling; Canonicalize(ExtractParallel) always equals
// Canonicalize(ExtractSerial).
Cover ExtractParallel(const AffiliationMatrix& m, double delta, const CaOptions& options,
                      CaCounters* counters = nullptr);

}  // namespace bigclam

#endif  // BIGCLAM_COMMUNITY_ASSOC_H_
