// Copyright 2026 The rjanus Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rjanus/ast.hpp"

namespace rjanus {

/// Failure classes shared by every engine. Differential tests compare the
/// kind and the span of the offending node, so all engines must report the
/// same kind at the same program point.
enum class ErrorKind {
  AssertionViolation,
  DivisionByZero,
  UndefinedProcedure,
  StuckConfiguration,
  Timeout,
};

std::string_view to_string(ErrorKind kind);

enum class Direction { Forward, Backward };

std::string_view to_string(Direction dir);

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorKind kind, const std::string& message, Span span = {})
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }

  /// Required and observed truth of a failed test or assertion.
  std::optional<bool> expected;
  std::optional<bool> actual;
  /// Label of the condition, for the program-counter engine.
  std::optional<std::uint32_t> label;
  std::optional<Direction> direction;

 private:
  ErrorKind kind_;
  Span span_;
};

}  // namespace rjanus
