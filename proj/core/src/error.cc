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

#include "bigclam/error.h"

namespace bigclam {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidCommunityCount: return "InvalidCommunityCount";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kDuplicateMember: return "DuplicateMember";
    case ErrorCode::kEmptyCover: return "EmptyCover";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kNestedStage: return "NestedStage";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace bigclam
