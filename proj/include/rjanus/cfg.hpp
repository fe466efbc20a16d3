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
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rjanus/ast.hpp"

/// \file cfg.hpp
/// Labeled programs and their control-flow graphs.
///
/// Every elementary block (assignment, call, uncall, skip, start, stop, and
/// the test and assertion of each `if`/`from`) gets a program-wide unique
/// positive label. Labels are handed out in depth-first pre-order, unit by
/// unit: main, then the procedures in declaration order, then the generated
/// inverse procedures. For Sum3 this gives main 1–4 and sumMul3 5–15.

namespace rjanus {

using Label = std::uint32_t;
using Edge = std::pair<Label, Label>;

/// A directed edge set over labels.
struct Cfg {
  std::set<Edge> edges;

  friend bool operator==(const Cfg&, const Cfg&) = default;
};

enum class BlockKind : std::uint8_t {
  Start, Stop, Assign, ArrayAssign, Call, Uncall, Skip, Test, Assertion,
};

/// What a label stands for. For `Test`/`Assertion`, `stmt` is the enclosing
/// `if` or `from` node (ctx(ℓ)) and `cond` the condition; otherwise `stmt` is
/// the block itself.
struct Block {
  BlockKind kind;
  StmtPtr stmt;
  ExprPtr cond;
  std::uint32_t unit = 0;

  bool is_condition() const { return kind == BlockKind::Test || kind == BlockKind::Assertion; }
  bool in_loop() const { return stmt->is<LoopStmt>(); }
};

/// Label assignment for a set of statement trees. Keyed by node identity, so
/// trees must not share statement nodes.
class Labeling {
 public:
  /// Labels `stmt` in pre-order starting at `next_label()`.
  void add(const StmtPtr& stmt, std::uint32_t unit = 0);

  Label next_label() const { return static_cast<Label>(blocks_.size() + 1); }
  std::size_t size() const { return blocks_.size(); }
  bool contains(Label l) const { return l >= 1 && l <= blocks_.size(); }

  const Block& block(Label l) const { return blocks_.at(l - 1); }

  /// Own label of an elementary statement, or the test label of an if/from.
  Label label_of(const Stmt& stmt) const;
  /// (test, assertion) labels of an if/from node.
  std::pair<Label, Label> cond_labels(const Stmt& stmt) const;

  Label entry(const Stmt& stmt) const;
  Label exit(const Stmt& stmt) const;

  Cfg flow(const Stmt& stmt) const;
  /// Edge reversal of flow(stmt).
  Cfg flow_inv(const Stmt& stmt) const;

 private:
  void flow_into(const Stmt& stmt, Cfg& out) const;

  std::vector<Block> blocks_;
  std::unordered_map<NodeId, Label> first_label_;
  std::unordered_map<NodeId, Label> assertion_label_;
};

/// A labeled unit: main, a procedure, or a generated inverse procedure. The
/// body is wrapped as `start body stop`.
struct Unit {
  std::string name;       // "main", "f" or "f_inv"
  std::string procedure;  // empty for main
  bool inverse = false;
  StmtPtr body;
  Label start = 0;
  Label stop = 0;
  Cfg flow;
};

/// A program with inverse procedures generated, every unit labeled, and
/// per-label successor/predecessor tables. Immutable once built.
class LabeledProgram {
 public:
  /// Throws InversionError when inverse procedure names clash.
  static std::shared_ptr<const LabeledProgram> build(const Program& program);

  const Program& program() const { return program_; }
  const Labeling& labeling() const { return labeling_; }
  const std::vector<Unit>& units() const { return units_; }
  const Unit& main() const { return units_.front(); }
  const Unit& unit_of(Label l) const { return units_.at(block(l).unit); }
  /// Unit of procedure `name` (or its inverse); null if undeclared.
  const Unit* find_unit(const std::string& name, bool inverse) const;

  std::size_t label_count() const { return labeling_.size(); }
  bool contains(Label l) const { return labeling_.contains(l); }
  const Block& block(Label l) const { return labeling_.block(l); }
  /// ctx(ℓ): the if/from node of a condition label, null otherwise.
  const Stmt* ctx(Label l) const;

  Label entry(const Stmt& s) const { return labeling_.entry(s); }
  Label exit(const Stmt& s) const { return labeling_.exit(s); }
  std::pair<Label, Label> cond_labels(const Stmt& s) const { return labeling_.cond_labels(s); }

  const std::vector<Label>& succ(Label l) const { return succ_.at(l); }
  const std::vector<Label>& pred(Label l) const { return pred_.at(l); }
  /// The single successor (resp. predecessor); throws std::logic_error for a
  /// label with none or two.
  Label unique_succ(Label l) const;
  Label unique_pred(Label l) const;

  /// One-line text of a block: the statement, or the condition.
  std::string block_text(Label l) const;

  LabeledProgram(const LabeledProgram&) = delete;
  LabeledProgram& operator=(const LabeledProgram&) = delete;

 private:
  LabeledProgram() = default;

  Program program_;
  Labeling labeling_;
  std::vector<Unit> units_;
  std::vector<std::vector<Label>> succ_;
  std::vector<std::vector<Label>> pred_;
};

/// Graphviz text, one `digraph` per unit.
std::string to_dot(const LabeledProgram& lp);

}  // namespace rjanus
