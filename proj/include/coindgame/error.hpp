// Copyright 2026 The coindgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COINDGAME_ERROR_HPP
#define COINDGAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace coindgame {

enum class ErrorCode {
  // validation
  UnresolvedReference,
  UnguardedCycle,
  PayoffDomainMismatch,
  DuplicateName,
  UnknownAgent,
  MalformedNode,
  // structural operations
  KindMismatch,
  NotFull,
  GamesDiffer,
  HeadClash,
  MissingStrategy,
  NotFinite,
  NotCombShaped,
  // fixed points and equilibria
  NonMonotoneDetected,
  UndefinedRootPayoff,
  // parser
  SyntaxError,
  MissingChoiceMarker,
  StrayChoiceMarker,
  UnderlyingGameMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A diagnostic tied to a position in DSL source text (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& what)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                        what),
        line_(line),
        column_(column),
        message_(what) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  // The text without code and position.
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace coindgame

#endif  // COINDGAME_ERROR_HPP
