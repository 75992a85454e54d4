// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "erag/error.hpp"

namespace erag {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kUnsupportedLabelKind: return "unsupported_label_kind";
    case ErrorCode::kUnsupportedTask: return "unsupported_task";
    case ErrorCode::kUndefinedCorrelation: return "undefined_correlation";
    case ErrorCode::kInsufficientData: return "insufficient_data";
    case ErrorCode::kBackendUnavailable: return "backend_unavailable";
    case ErrorCode::kBackendRejected: return "backend_rejected";
    case ErrorCode::kContextOverflow: return "context_overflow";
    case ErrorCode::kCancelled: return "cancelled";
    case ErrorCode::kIoError: return "io_error";
    case ErrorCode::kNotFound: return "not_found";
  }
  return "unknown";
}

ParseError::ParseError(std::string path, std::size_t line,
                       const std::string& detail)
    : Error(ErrorCode::kParseError,
            path + ":" + std::to_string(line) + ": " + detail),
      path_(std::move(path)),
      line_(line) {}

}  // namespace erag
