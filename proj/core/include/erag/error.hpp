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

#ifndef ERAG_ERROR_HPP_
#define ERAG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace erag {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kDuplicateId,
  kUnsupportedLabelKind,
  kUnsupportedTask,
  kUndefinedCorrelation,
  kInsufficientData,
  kBackendUnavailable,
  kBackendRejected,
  kContextOverflow,
  kCancelled,
  kIoError,
  kNotFound,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library is an erag::Error; `code()` lets callers
// branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure tied to a physical line of an input file (1-based).
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& detail);

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Backend answered with a non-retryable status; `status()` is the HTTP code
// (0 for non-HTTP backends).
class BackendRejected : public Error {
 public:
  BackendRejected(int status, const std::string& message)
      : Error(ErrorCode::kBackendRejected, message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

}  // namespace erag

#endif  // ERAG_ERROR_HPP_
