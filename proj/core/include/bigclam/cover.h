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

#ifndef BIGCLAM_COVER_H_
#define BIGCLAM_COVER_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bigclam/graph.h"

namespace bigclam {

// A cover is the ordered outer sequence of communities produced by the
// community association stage; each community is an ordered list of node
// IDs (internal IDs, or external labels after I/O). Two covers describe the
// same set of sets iff their canonical forms are identical.
using Community = std::vector<std::int64_t>;
using Cover = std::vector<Community>;

// One line per community, members separated by TAB, LF terminated. With a
// graph, internal IDs are translated to the graph's external labels.
void WriteCover(const Cover& cover, std::ostream& out, const Graph* id_map = nullptr);

// Reads the format written by WriteCover in file order. Any run of spaces or
// tabs separates members; blank lines are skipped. Throws kMalformedLine and
// kDuplicateMember (both with line numbers).
Cover ReadCover(std::istream& in);

// Members ascending; communities in lexicographic order of their sorted
// member lists. Identical communities are kept (multiset semantics).
Cover Canonicalize(Cover cover);

struct EqualityReport {
  bool equal = true;
  // Set when unequal: names the first differing community index in
  // canonical order (or the count mismatch).
  std::optional<std::string> first_diff;
};

EqualityReport CompareCovers(const Cover& a, const Cover& b);

}  // namespace bigclam

#endif  // BIGCLAM_COVER_H_
