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

#include "bigclam/sparse_affiliation.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>

#include "bigclam/error.h"

namespace bigclam {

namespace {

auto FindEntry(std::span<const SparseEntry> entries, CommunityId c) {
  return std::lower_bound(entries.begin(), entries.end(), c,
                          [](const SparseEntry& e, CommunityId id) { return e.community < id; });
}

}  // namespace

SparseRow SparseRow::FromEntries(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.community < b.community; });
  SparseRow row;
  row.entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!row.entries_.empty() && row.entries_.back().community == e.community) {
      row.entries_.back().value += e.value;
    } else {
      row.entries_.push_back(e);
    }
  }
  for (auto& e : row.entries_) e.value = std::min(e.value, kMaxWeight);
  std::erase_if(row.entries_, [](const SparseEntry& e) { return !(e.value > 0.0); });
  return row;
}

SparseRow SparseRow::FromSortedUnclamped(std::vector<SparseEntry> entries) {
  SparseRow row;
  row.entries_ = std::move(entries);
  return row;
}

double SparseRow::Get(CommunityId c) const {
  auto all = entries();
  auto it = FindEntry(all, c);
  return it != all.end() && it->community == c ? it->value : 0.0;
}

double SparseRow::Set(CommunityId c, double w) {
  w = std::min(w, kMaxWeight);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const SparseEntry& e, CommunityId id) { return e.community < id; });
  const bool present = it != entries_.end() && it->community == c;
  if (!(w > 0.0)) {
    if (!present) return 0.0;
    double old = it->value;
    entries_.erase(it);
    return -old;
  }
  if (present) {
    double delta = w - it->value;
    it->value = w;
    return delta;
  }
  entries_.insert(it, SparseEntry{c, w});
  return w;
}

double Dot(const SparseRow& a, const SparseRow& b) {
  const SparseRow& shorter = a.size() <= b.size() ? a : b;
  const SparseRow& longer = a.size() <= b.size() ? b : a;
  auto probe = longer.entries();
  double sum = 0.0;
  for (const auto& e : shorter.entries()) {
    auto it = FindEntry(probe, e.community);
    if (it == probe.end()) break;
    if (it->community == e.community) sum += e.value * it->value;
    // Both rows are sorted: later probes never look left of this one.
    probe = probe.subspan(static_cast<std::size_t>(it - probe.begin()));
  }
  return sum;
}

AffiliationMatrix::AffiliationMatrix(std::size_t node_count, std::size_t community_count)
    : rows_(node_count), sum_f_(community_count, 0.0) {}

void AffiliationMatrix::CheckNode(NodeId u) const {
  if (u >= rows_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "row " + std::to_string(u) + " out of range");
  }
}

void AffiliationMatrix::CheckCommunity(CommunityId c) const {
  if (c >= sum_f_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "community " + std::to_string(c) + " out of range");
  }
}

void AffiliationMatrix::AddToSum(CommunityId c, double delta) {
  std::atomic_ref<double>(sum_f_[c]).fetch_add(delta, std::memory_order_relaxed);
}

double AffiliationMatrix::Get(NodeId u, CommunityId c) const {
  CheckNode(u);
  CheckCommunity(c);
  return rows_[u].Get(c);
}

void AffiliationMatrix::Set(NodeId u, CommunityId c, double w) {
  CheckNode(u);
  CheckCommunity(c);
  double delta = rows_[u].Set(c, w);
  if (delta != 0.0) AddToSum(c, delta);
}

const SparseRow& AffiliationMatrix::Row(NodeId u) const {
  CheckNode(u);
  return rows_[u];
}

void AffiliationMatrix::ReplaceRow(NodeId u, SparseRow row) {
  CheckNode(u);
  if (!row.empty()) CheckCommunity(row.entries().back().community);
  // Merge walk over old and new supports, applying per-community deltas.
  auto old_entries = rows_[u].entries();
  auto new_entries = row.entries();
  std::size_t i = 0, j = 0;
  while (i < old_entries.size() || j < new_entries.size()) {
    if (j == new_entries.size() ||
        (i < old_entries.size() && old_entries[i].community < new_entries[j].community)) {
      AddToSum(old_entries[i].community, -old_entries[i].value);
      ++i;
    } else if (i == old_entries.size() || new_entries[j].community < old_entries[i].community) {
      AddToSum(new_entries[j].community, new_entries[j].value);
      ++j;
    } else {
      double delta = new_entries[j].value - old_entries[i].value;
      if (delta != 0.0) AddToSum(new_entries[j].community, delta);
      ++i;
      ++j;
    }
  }
  rows_[u] = std::move(row);
}

void AffiliationMatrix::Recompute() {
  std::fill(sum_f_.begin(), sum_f_.end(), 0.0);
  for (const auto& row : rows_) {
    for (const auto& e : row.entries()) sum_f_[e.community] += e.value;
  }
}

SparseRow AffiliationMatrix::NeighborSum(const Graph& graph, NodeId u) const {
  std::vector<SparseEntry> acc;
  for (NodeId v : graph.Neighbors(u)) {
    auto entries = Row(v).entries();
    acc.insert(acc.end(), entries.begin(), entries.end());
  }
  std::sort(acc.begin(), acc.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.community < b.community; });
  std::vector<SparseEntry> merged;
  for (const auto& e : acc) {
    if (!merged.empty() && merged.back().community == e.community) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return !(e.value > 0.0); });
  return SparseRow::FromSortedUnclamped(std::move(merged));
}

std::size_t AffiliationMatrix::NonZeroCount() const {
  std::size_t nnz = 0;
  for (const auto& row : rows_) nnz += row.size();
  return nnz;
}

void WriteAffiliations(const AffiliationMatrix& m, std::ostream& out) {
  out << "# affiliations " << m.node_count() << ' ' << m.community_count() << '\n';
  char buf[64];
  for (NodeId u = 0; u < m.node_count(); ++u) {
    out << u;
    for (const auto& e : m.Row(u).entries()) {
      std::snprintf(buf, sizeof(buf), "%.17g", e.value);
      out << '\t' << e.community << ':' << buf;
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failure");
}

AffiliationMatrix ReadAffiliations(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  std::size_t nodes = 0, communities = 0;
  {
    std::string hash, tag;
    if (!std::getline(in, line)) throw Error(ErrorCode::kMalformedLine, "missing header", 1);
    std::istringstream header(line);
    if (!(header >> hash >> tag >> nodes >> communities) || hash != "#" || tag != "affiliations") {
      throw Error(ErrorCode::kMalformedLine, "bad header", 1);
    }
  }
  AffiliationMatrix m(nodes, communities);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    NodeId u = 0;
    if (!(fields >> u) || u >= nodes) {
      throw Error(ErrorCode::kMalformedLine, "bad node id", line_no);
    }
    std::vector<SparseEntry> entries;
    std::string pair;
    while (fields >> pair) {
      auto colon = pair.find(':');
      SparseEntry e{};
      const char* end = pair.data() + pair.size();
      if (colon == std::string::npos ||
          std::from_chars(pair.data(), pair.data() + colon, e.community).ptr != pair.data() + colon ||
          std::from_chars(pair.data() + colon + 1, end, e.value).ptr != end ||
          e.community >= communities || !(e.value > 0.0)) {
        throw Error(ErrorCode::kMalformedLine, "bad entry '" + pair + "'", line_no);
      }
      entries.push_back(e);
    }
    m.ReplaceRow(u, SparseRow::FromEntries(std::move(entries)));
  }
  return m;
}

}  // namespace bigclam
