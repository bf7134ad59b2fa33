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

#ifndef BIGCLAM_GRAPH_H_
#define BIGCLAM_GRAPH_H_

#include <cstdint>
#include <istream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bigclam {

using NodeId = std::uint32_t;
using NodeLabel = std::int64_t;

struct NetworkStats {
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  // |E| / |V|. This is the quantity the runtime analysis calls the average
  // degree, and the one the dominance predicate squares.
  double edges_per_node = 0.0;
  // Conventional undirected average degree, 2|E| / |V|.
  double average_degree = 0.0;
};

// Undirected simple graph in compressed sorted-adjacency form. Immutable
// after construction and safe to share between threads.
//
// Internal IDs are dense 0..|V|-1. External labels are assigned IDs in
// ascending label order, so the resulting Graph does not depend on the order
// in which edges were supplied.
class Graph {
 public:
  Graph() = default;

  // Builds from internal-ID edge pairs over nodes 0..node_count-1. Self-loops
  // are dropped and duplicates collapsed. Labels are the identity map. Zero
  // edges are allowed here (isolated nodes only).
  static Graph FromEdges(std::size_t node_count,
                         std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }

  // Throws kNodeOutOfRange.
  std::span<const NodeId> Neighbors(NodeId u) const;
  std::size_t Degree(NodeId u) const;
  bool HasEdge(NodeId u, NodeId v) const;

  NodeLabel Label(NodeId u) const;
  // Throws kNodeOutOfRange when the label is unknown.
  NodeId IdOf(NodeLabel label) const;
  std::span<const NodeLabel> labels() const { return labels_; }

  bool operator==(const Graph& other) const;

 private:
  friend Graph BuildGraph(std::vector<NodeLabel> labels,
                          std::vector<std::pair<NodeId, NodeId>> edges);

  void CheckNode(NodeId u) const;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::uint64_t edge_count_ = 0;
  std::vector<NodeLabel> labels_;
  std::unordered_map<NodeLabel, NodeId> ids_;
};

// Parses a whitespace-separated edge list. Lines starting with '#' are
// comments, blank lines are skipped, extra tokens after the first two are
// ignored and CRLF endings are accepted. Throws kMalformedLine (with the line
// number) on unparseable tokens and kEmptyGraph when no edge survives
// self-loop removal. Nodes that only occur in self-loops are kept as
// isolated nodes.
Graph LoadEdgeList(std::istream& in);

// Throws kEmptyGraph for a graph without nodes.
NetworkStats Stats(const Graph& graph);

}  // namespace bigclam

#endif  // BIGCLAM_GRAPH_H_
