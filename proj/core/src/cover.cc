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

#include "bigclam/cover.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

#include "bigclam/error.h"

namespace bigclam {

void WriteCover(const Cover& cover, std::ostream& out, const Graph* id_map) {
  for (const auto& community : cover) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i > 0) out << '\t';
      out << (id_map != nullptr ? id_map->Label(static_cast<NodeId>(community[i]))
                                : community[i]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failure");
}

Cover ReadCover(std::istream& in) {
  Cover cover;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    Community community;
    while (true) {
      auto begin = rest.find_first_not_of(" \t\r");
      if (begin == std::string_view::npos) break;
      rest.remove_prefix(begin);
      auto end = std::min(rest.find_first_of(" \t\r"), rest.size());
      std::int64_t id = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + end, id);
      if (ec != std::errc() || ptr != rest.data() + end) {
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": bad node label", line_no);
      }
      community.push_back(id);
      rest.remove_prefix(end);
    }
    if (community.empty()) continue;
    Community sorted = community;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kDuplicateMember,
                  "line " + std::to_string(line_no) + ": repeated member", line_no);
    }
    cover.push_back(std::move(community));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  return cover;
}

Cover Canonicalize(Cover cover) {
  for (auto& community : cover) std::sort(community.begin(), community.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

std::string Describe(const Community& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size() && i < 8; ++i) os << (i ? "," : "") << c[i];
  if (c.size() > 8) os << ",...";
  os << "] (" << c.size() << " members)";
  return os.str();
}

}  // namespace

EqualityReport CompareCovers(const Cover& a, const Cover& b) {
  const Cover ca = Canonicalize(a);
  const Cover cb = Canonicalize(b);
  EqualityReport report;
  const std::size_t common = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (ca[i] != cb[i]) {
      report.equal = false;
      report.first_diff = "community " + std::to_string(i) + " differs: " + Describe(ca[i]) +
                          " vs " + Describe(cb[i]);
      return report;
    }
  }
  if (ca.size() != cb.size()) {
    report.equal = false;
    report.first_diff = "community count differs: " + std::to_string(ca.size()) + " vs " +
                        std::to_string(cb.size()) + " (first unmatched at index " +
                        std::to_string(common) + ")";
  }
  return report;
}

}  // namespace bigclam
