// Copyright 2026 The Tombrain Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tom {

enum class ErrorCode {
  kUnknownPrefix,
  kMalformedCompactForm,
  kNoMatchingPrefix,
  kSpanOutOfBounds,
  kResultCapExceeded,
  kUnknownClaim,
  kUnknownPredicate,
  kNotAPerson,
  kParseError,
  kLookupUnavailable,
  kUnparsableUtterance,
  kUnresolvedReference,
  kMissingTemplate,
  kPreconditionViolation,
  kEmptyTrack,
  kLabelMismatch,
  kUnknownTrack,
  kScriptParseError,
  kExpectMismatch,
  kSessionClosed,
  kMalformedEvent,
  kUnknownSelector,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract violation so callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tom
