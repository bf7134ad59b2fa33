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

#include "bigclam/graph.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "bigclam/error.h"

namespace bigclam {

Graph BuildGraph(std::vector<NodeLabel> labels,
                 std::vector<std::pair<NodeId, NodeId>> edges) {
  Graph g;
  const std::size_t n = labels.size();
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (min, max): lower neighbors arrive first in
  // ascending order, then higher ones, so every list ends up sorted.
  for (const auto& [u, v] : edges) g.adjacency_[cursor[v]++] = u;
  for (const auto& [u, v] : edges) g.adjacency_[cursor[u]++] = v;
  g.edge_count_ = edges.size();
  g.ids_.reserve(n);
  for (std::size_t u = 0; u < n; ++u) g.ids_.emplace(labels[u], static_cast<NodeId>(u));
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::FromEdges(std::size_t node_count,
                       std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<NodeLabel> labels(node_count);
  for (std::size_t u = 0; u < node_count; ++u) labels[u] = static_cast<NodeLabel>(u);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw Error(ErrorCode::kNodeOutOfRange, "edge endpoint beyond node count");
    }
  }
  return BuildGraph(std::move(labels), {edges.begin(), edges.end()});
}

void Graph::CheckNode(NodeId u) const {
  if (u >= labels_.size()) {
    throw Error(ErrorCode::kNodeOutOfRange,
                "node " + std::to_string(u) + " with |V|=" + std::to_string(labels_.size()));
  }
}

std::span<const NodeId> Graph::Neighbors(NodeId u) const {
  CheckNode(u);
  return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::size_t Graph::Degree(NodeId u) const {
  CheckNode(u);
  return offsets_[u + 1] - offsets_[u];
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  auto nbrs = Neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

NodeLabel Graph::Label(NodeId u) const {
  CheckNode(u);
  return labels_[u];
}

NodeId Graph::IdOf(NodeLabel label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) {
    throw Error(ErrorCode::kNodeOutOfRange, "unknown label " + std::to_string(label));
  }
  return it->second;
}

bool Graph::operator==(const Graph& other) const {
  return offsets_ == other.offsets_ && adjacency_ == other.adjacency_ &&
         edge_count_ == other.edge_count_ && labels_ == other.labels_;
}

namespace {

bool ParseLabel(std::string_view token, NodeLabel& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits off the next whitespace-delimited token, advancing `rest`.
std::string_view NextToken(std::string_view& rest) {
  constexpr std::string_view kSpace = " \t\r\v\f";
  auto begin = rest.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  auto end = rest.find_first_of(kSpace);
  auto token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

}  // namespace

Graph LoadEdgeList(std::istream& in) {
  std::vector<std::pair<NodeLabel, NodeLabel>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    auto first = NextToken(rest);
    if (first.empty() || first.front() == '#') continue;
    auto second = NextToken(rest);
    NodeLabel a = 0, b = 0;
    if (second.empty() || !ParseLabel(first, a) || !ParseLabel(second, b)) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected two node labels", line_no);
    }
    raw.emplace_back(a, b);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");

  std::vector<NodeLabel> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&](NodeLabel l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a != b) edges.emplace_back(id_of(a), id_of(b));
  }
  if (edges.empty()) throw Error(ErrorCode::kEmptyGraph, "no edges after cleaning");
  return BuildGraph(std::move(labels), std::move(edges));
}

NetworkStats Stats(const Graph& graph) {
  if (graph.node_count() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no nodes");
  NetworkStats s;
  s.node_count = graph.node_count();
  s.edge_count = graph.edge_count();
  s.edges_per_node = static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);
  s.average_degree = 2.0 * s.edges_per_node;
  return s;
}

}  // namespace bigclam
