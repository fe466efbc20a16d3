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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rjanus/ast.hpp"

namespace rjanus {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Span span;
};

/// `file:line:col: error: message`
std::string format_diagnostic(const Diagnostic& diag, std::string_view file = "");

bool has_errors(const std::vector<Diagnostic>& diags);

struct ParseOptions {
  /// Enforce the strict grammar: at least one procedure, mandatory `else`
  /// and `loop` clauses.
  bool strict = false;
};

struct ParseResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

/// Parses a `.ja` source text. Sequences come back right-associated and every
/// node carries the span it was parsed from. Both `=` and `==` denote
/// equality; `//` starts a line comment.
ParseResult parse(std::string_view source, const ParseOptions& options = {});

/// Reports assignments whose target occurs on the right-hand side (or in the
/// index), calls/uncalls of undeclared procedures, duplicate procedure names,
/// and user procedures that clash with a generated `id_inv` name.
std::vector<Diagnostic> check_reversibility(const Program& program);

std::string render(const Expr& expr);
std::string render(const Stmt& stmt, int indent = 0);
std::string render(const Program& program);

/// One-line form of an elementary block, used for CFG node labels.
std::string render_block(const Stmt& stmt);

}  // namespace rjanus
