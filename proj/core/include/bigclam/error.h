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

#ifndef BIGCLAM_ERROR_H_
#define BIGCLAM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bigclam {

enum class ErrorCode {
  kMalformedLine,
  kEmptyGraph,
  kNodeOutOfRange,
  kIndexOutOfRange,
  kInvalidCommunityCount,
  kDegenerateGraph,
  kDuplicateMember,
  kEmptyCover,
  kInvalidSpec,
  kNestedStage,
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as an Error carrying a code. Parse
// errors additionally carry the 1-based line number of the offending line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace bigclam

#endif  // BIGCLAM_ERROR_H_
