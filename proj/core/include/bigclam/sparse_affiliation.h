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

#ifndef BIGCLAM_SPARSE_AFFILIATION_H_
#define BIGCLAM_SPARSE_AFFILIATION_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "bigclam/graph.h"

namespace bigclam {

using CommunityId = std::uint32_t;

// Upper clamp on every stored affiliation weight.
inline constexpr double kMaxWeight = 1000.0;

struct SparseEntry {
  CommunityId community;
  double value;

  bool operator==(const SparseEntry&) const = default;
};

// Sparse non-negative row F_u. Community IDs are strictly ascending and
// every stored weight lies in (0, kMaxWeight].
class SparseRow {
 public:
  SparseRow() = default;

  // Sorts, sums duplicate IDs, clamps to kMaxWeight and drops non-positive
  // weights.
  static SparseRow FromEntries(std::vector<SparseEntry> entries);
  // Takes entries already strictly ascending with positive values, without
  // clamping. Used for aggregates such as neighbor sums, which may exceed
  // kMaxWeight.
  static SparseRow FromSortedUnclamped(std::vector<SparseEntry> entries);

  std::span<const SparseEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double Get(CommunityId c) const;
  // w <= 0 erases; w is clamped to kMaxWeight. Returns the applied delta.
  double Set(CommunityId c, double w);

  bool operator==(const SparseRow&) const = default;

 private:
  std::vector<SparseEntry> entries_;
};

// Sum over shared community IDs of a_c * b_c. Walks the shorter row and
// binary-searches the longer, so the cost is min(|a|, |b|) probes.
double Dot(const SparseRow& a, const SparseRow& b);

// The affiliation matrix F: |V| sparse rows plus the cached column sums
// sum_f[c] = sum_u F_uc.
//
// Concurrency: any number of concurrent readers. A row may be written by one
// thread while other threads write *other* rows, provided no thread reads a
// row that is being written. Column-sum deltas from Set/ReplaceRow are
// applied with per-component atomic addition, so concurrent writers of
// distinct rows keep sum_f consistent. Reading sum_f concurrently with such
// writers is not supported.
class AffiliationMatrix {
 public:
  AffiliationMatrix() = default;
  AffiliationMatrix(std::size_t node_count, std::size_t community_count);

  std::size_t node_count() const { return rows_.size(); }
  std::size_t community_count() const { return sum_f_.size(); }

  // Throws kIndexOutOfRange.
  double Get(NodeId u, CommunityId c) const;
  void Set(NodeId u, CommunityId c, double w);
  const SparseRow& Row(NodeId u) const;
  // Throws kIndexOutOfRange if the row names a community >= |C|.
  void ReplaceRow(NodeId u, SparseRow row);

  std::span<const double> sum_f() const { return sum_f_; }
  // Rebuilds sum_f from the rows.
  void Recompute();

  // Sum of neighbors' rows. Throws kNodeOutOfRange.
  SparseRow NeighborSum(const Graph& graph, NodeId u) const;

  std::size_t NonZeroCount() const;

  bool operator==(const AffiliationMatrix&) const = default;

 private:
  void CheckNode(NodeId u) const;
  void CheckCommunity(CommunityId c) const;
  void AddToSum(CommunityId c, double delta);

  std::vector<SparseRow> rows_;
  std::vector<double> sum_f_;
};

// Text snapshot: a header line "# affiliations <nodes> <communities>", then
// one line per node "u<TAB>c:w<TAB>c:w...", weights printed round-trip exact.
void WriteAffiliations(const AffiliationMatrix& m, std::ostream& out);
AffiliationMatrix ReadAffiliations(std::istream& in);

}  // namespace bigclam

#endif  // BIGCLAM_SPARSE_AFFILIATION_H_
