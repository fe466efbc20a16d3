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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/// \file ast.hpp
/// Abstract syntax of Janus programs.
///
/// Trees are immutable and shared: every node is held through a
/// `shared_ptr<const T>`, so transformations such as inversion rebuild only
/// the statement spine and reuse expression subtrees. Each statement carries
/// a process-unique `NodeId`; the CFG and the reversible engine key their
/// tables on it.

namespace rjanus {

/// Half-open byte range into the source plus the 1-based line/column of its
/// first byte. Synthesized nodes have `line == 0`.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  bool synthesized() const { return line == 0; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// The reversible update operators `+=`, `-=`, `^=`.
enum class ModOp : std::uint8_t { Plus, Minus, Xor };

/// Binary operators that may appear in expression position.
enum class BinOp : std::uint8_t {
  Add, Sub, Xor, Mul, Div, Mod,
  BitAnd, BitOr, LogAnd, LogOr,
  Lt, Gt, Le, Ge, Eq, Ne,
};

std::string_view to_string(ModOp op);
std::string_view to_string(BinOp op);

/// Binding strength used by both the parser and the renderer; larger binds
/// tighter. All binary operators are left-associative.
int precedence(BinOp op);

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstExpr {
  std::int32_t value;
};
struct VarExpr {
  std::string name;
};
struct IndexExpr {
  std::string name;
  ExprPtr index;
};
struct BinaryExpr {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<ConstExpr, VarExpr, IndexExpr, BinaryExpr> node;
  Span span;
};

ExprPtr make_const(std::int32_t value, Span span = {});
ExprPtr make_var(std::string name, Span span = {});
ExprPtr make_index(std::string name, ExprPtr index, Span span = {});
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, Span span = {});

// ---------------------------------------------------------------------------
// Statements

using NodeId = std::uint64_t;

/// Returns an id never handed out before in this process.
NodeId fresh_node_id();

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

/// `x op= value`
struct AssignStmt {
  std::string target;
  ModOp op;
  ExprPtr value;
};
/// `x[index] op= value`
struct ArrayAssignStmt {
  std::string target;
  ExprPtr index;
  ModOp op;
  ExprPtr value;
};
/// `if test then then_body else else_body fi assertion`
struct IfStmt {
  ExprPtr test;
  StmtPtr then_body;
  StmtPtr else_body;
  ExprPtr assertion;
};
/// `from entry do do_body loop loop_body until exit`
struct LoopStmt {
  ExprPtr entry;
  StmtPtr do_body;
  StmtPtr loop_body;
  ExprPtr exit;
};
struct CallStmt {
  std::string callee;
};
struct UncallStmt {
  std::string callee;
};
struct SkipStmt {};
/// `first rest`; parsed sequences are right combs.
struct SeqStmt {
  StmtPtr first;
  StmtPtr rest;
};
/// Unit delimiters injected by labeling; never produced by the parser.
struct StartStmt {};
struct StopStmt {};

struct Stmt {
  std::variant<AssignStmt, ArrayAssignStmt, IfStmt, LoopStmt, CallStmt,
               UncallStmt, SkipStmt, SeqStmt, StartStmt, StopStmt>
      node;
  Span span;
  NodeId id = 0;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

StmtPtr make_assign(std::string target, ModOp op, ExprPtr value, Span span = {});
StmtPtr make_array_assign(std::string target, ExprPtr index, ModOp op,
                          ExprPtr value, Span span = {});
StmtPtr make_if(ExprPtr test, StmtPtr then_body, StmtPtr else_body,
                ExprPtr assertion, Span span = {});
StmtPtr make_loop(ExprPtr entry, StmtPtr do_body, StmtPtr loop_body,
                  ExprPtr exit, Span span = {});
StmtPtr make_call(std::string callee, Span span = {});
StmtPtr make_uncall(std::string callee, Span span = {});
StmtPtr make_skip(Span span = {});
StmtPtr make_seq_pair(StmtPtr first, StmtPtr rest, Span span = {});
StmtPtr make_start();
StmtPtr make_stop();

/// Builds a right-associated sequence; a single element is returned as is.
/// `parts` must be non-empty.
StmtPtr make_seq(std::span<const StmtPtr> parts);

/// Flattens nested sequences (of any association) into their leaves, left to
/// right.
std::vector<StmtPtr> flatten_seq(const StmtPtr& stmt);

// ---------------------------------------------------------------------------
// Programs

/// A procedure declaration. `inverse` marks the generated id⁻¹ companion;
/// `body` is null for a declaration with an empty body.
struct Procedure {
  std::string name;
  bool inverse = false;
  StmtPtr body;
  Span span;

  /// Spelling used in rendered source: `name` or `name_inv`.
  std::string surface_name() const;
};

struct Program {
  StmtPtr main;
  std::vector<Procedure> procedures;

  const Procedure* find(std::string_view name, bool inverse = false) const;
};

// ---------------------------------------------------------------------------
// Structural equality: ignores spans and node ids.

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const StmtPtr& a, const StmtPtr& b);
bool structurally_equal(const Program& a, const Program& b);

/// Number of statement and expression nodes reachable from `stmt`.
std::size_t node_count(const Stmt& stmt);

}  // namespace rjanus
