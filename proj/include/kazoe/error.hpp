// Copyright 2026 The Kazoe Authors.
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

#ifndef KAZOE_ERROR_HPP_
#define KAZOE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kazoe {

// Every failure the engine can report carries one of these codes so that
// callers (and the CLI's stderr lines) can dispatch without string matching.
enum class ErrorCode {
  // Lexicon loading.
  SyntaxError,
  SchemaViolation,
  InvariantViolation,
  // Phrase parsing.
  UnknownLemma,
  PatternMismatch,
  BadNumeral,
  JosushiNounPhrase,
  // Transfer and realization.
  NoRealization,
  NotAttributeNp,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::BadNumeral: return "BadNumeral";
    case ErrorCode::JosushiNounPhrase: return "JosushiNounPhrase";
    case ErrorCode::NoRealization: return "NoRealization";
    case ErrorCode::NotAttributeNp: return "NotAttributeNp";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kazoe

#endif  // KAZOE_ERROR_HPP_
