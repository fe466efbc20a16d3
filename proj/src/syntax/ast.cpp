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

#include "rjanus/ast.hpp"

#include <atomic>
#include <cassert>

namespace rjanus {

std::string_view to_string(ModOp op) {
  switch (op) {
    case ModOp::Plus: return "+=";
    case ModOp::Minus: return "-=";
    case ModOp::Xor: return "^=";
  }
  return "?";
}

std::string_view to_string(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Xor: return "^";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::BitAnd: return "&";
    case BinOp::BitOr: return "|";
    case BinOp::LogAnd: return "&&";
    case BinOp::LogOr: return "||";
    case BinOp::Lt: return "<";
    case BinOp::Gt: return ">";
    case BinOp::Le: return "<=";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "=";
    case BinOp::Ne: return "!=";
  }
  return "?";
}

int precedence(BinOp op) {
  switch (op) {
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
      return 7;
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Xor:
      return 6;
    case BinOp::Lt:
    case BinOp::Gt:
    case BinOp::Le:
    case BinOp::Ge:
    case BinOp::Eq:
    case BinOp::Ne:
      return 5;
    case BinOp::BitAnd:
      return 4;
    case BinOp::BitOr:
      return 3;
    case BinOp::LogAnd:
      return 2;
    case BinOp::LogOr:
      return 1;
  }
  return 0;
}

ExprPtr make_const(std::int32_t value, Span span) {
  return std::make_shared<const Expr>(Expr{ConstExpr{value}, span});
}
ExprPtr make_var(std::string name, Span span) {
  return std::make_shared<const Expr>(Expr{VarExpr{std::move(name)}, span});
}
ExprPtr make_index(std::string name, ExprPtr index, Span span) {
  return std::make_shared<const Expr>(
      Expr{IndexExpr{std::move(name), std::move(index)}, span});
}
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, Span span) {
  return std::make_shared<const Expr>(
      Expr{BinaryExpr{op, std::move(lhs), std::move(rhs)}, span});
}

NodeId fresh_node_id() {
  static std::atomic<NodeId> next{1};
  return next.fetch_add(1, std::memory_order_relaxed);
}

namespace {

template <typename T>
StmtPtr make_stmt(T node, Span span) {
  return std::make_shared<const Stmt>(Stmt{std::move(node), span, fresh_node_id()});
}

}  // namespace

StmtPtr make_assign(std::string target, ModOp op, ExprPtr value, Span span) {
  return make_stmt(AssignStmt{std::move(target), op, std::move(value)}, span);
}
StmtPtr make_array_assign(std::string target, ExprPtr index, ModOp op,
                          ExprPtr value, Span span) {
  return make_stmt(
      ArrayAssignStmt{std::move(target), std::move(index), op, std::move(value)},
      span);
}
StmtPtr make_if(ExprPtr test, StmtPtr then_body, StmtPtr else_body,
                ExprPtr assertion, Span span) {
  return make_stmt(IfStmt{std::move(test), std::move(then_body),
                          std::move(else_body), std::move(assertion)},
                   span);
}
StmtPtr make_loop(ExprPtr entry, StmtPtr do_body, StmtPtr loop_body,
                  ExprPtr exit, Span span) {
  return make_stmt(LoopStmt{std::move(entry), std::move(do_body),
                            std::move(loop_body), std::move(exit)},
                   span);
}
StmtPtr make_call(std::string callee, Span span) {
  return make_stmt(CallStmt{std::move(callee)}, span);
}
StmtPtr make_uncall(std::string callee, Span span) {
  return make_stmt(UncallStmt{std::move(callee)}, span);
}
StmtPtr make_skip(Span span) { return make_stmt(SkipStmt{}, span); }
StmtPtr make_seq_pair(StmtPtr first, StmtPtr rest, Span span) {
  return make_stmt(SeqStmt{std::move(first), std::move(rest)}, span);
}
StmtPtr make_start() { return make_stmt(StartStmt{}, {}); }
StmtPtr make_stop() { return make_stmt(StopStmt{}, {}); }

StmtPtr make_seq(std::span<const StmtPtr> parts) {
  assert(!parts.empty());
  StmtPtr result = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    Span span{(*it)->span.begin, result->span.end, (*it)->span.line,
              (*it)->span.column};
    result = make_seq_pair(*it, result, span);
  }
  return result;
}

namespace {

void flatten_into(const StmtPtr& stmt, std::vector<StmtPtr>& out) {
  if (const auto* seq = stmt->as<SeqStmt>()) {
    flatten_into(seq->first, out);
    flatten_into(seq->rest, out);
  } else {
    out.push_back(stmt);
  }
}

}  // namespace

std::vector<StmtPtr> flatten_seq(const StmtPtr& stmt) {
  std::vector<StmtPtr> out;
  flatten_into(stmt, out);
  return out;
}

std::string Procedure::surface_name() const {
  return inverse ? name + "_inv" : name;
}

const Procedure* Program::find(std::string_view name, bool inverse) const {
  for (const auto& proc : procedures) {
    if (proc.name == name && proc.inverse == inverse) return &proc;
  }
  return nullptr;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* c = std::get_if<ConstExpr>(&a.node)) {
    return c->value == std::get<ConstExpr>(b.node).value;
  }
  if (const auto* v = std::get_if<VarExpr>(&a.node)) {
    return v->name == std::get<VarExpr>(b.node).name;
  }
  if (const auto* i = std::get_if<IndexExpr>(&a.node)) {
    const auto& j = std::get<IndexExpr>(b.node);
    return i->name == j.name && structurally_equal(*i->index, *j.index);
  }
  const auto& x = std::get<BinaryExpr>(a.node);
  const auto& y = std::get<BinaryExpr>(b.node);
  return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
         structurally_equal(*x.rhs, *y.rhs);
}

bool structurally_equal(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return x.target == y.target && x.op == y.op &&
                 structurally_equal(*x.value, *y.value);
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          return x.target == y.target && x.op == y.op &&
                 structurally_equal(*x.index, *y.index) &&
                 structurally_equal(*x.value, *y.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return structurally_equal(*x.test, *y.test) &&
                 structurally_equal(x.then_body, y.then_body) &&
                 structurally_equal(x.else_body, y.else_body) &&
                 structurally_equal(*x.assertion, *y.assertion);
        } else if constexpr (std::is_same_v<T, LoopStmt>) {
          return structurally_equal(*x.entry, *y.entry) &&
                 structurally_equal(x.do_body, y.do_body) &&
                 structurally_equal(x.loop_body, y.loop_body) &&
                 structurally_equal(*x.exit, *y.exit);
        } else if constexpr (std::is_same_v<T, CallStmt> ||
                             std::is_same_v<T, UncallStmt>) {
          return x.callee == y.callee;
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          return structurally_equal(x.first, y.first) &&
                 structurally_equal(x.rest, y.rest);
        } else {
          return true;
        }
      },
      a.node);
}

bool structurally_equal(const Program& a, const Program& b) {
  if (!structurally_equal(a.main, b.main)) return false;
  if (a.procedures.size() != b.procedures.size()) return false;
  for (std::size_t i = 0; i < a.procedures.size(); ++i) {
    const auto& p = a.procedures[i];
    const auto& q = b.procedures[i];
    if (p.name != q.name || p.inverse != q.inverse ||
        !structurally_equal(p.body, q.body)) {
      return false;
    }
  }
  return true;
}

namespace {

std::size_t expr_count(const Expr& e) {
  if (const auto* i = std::get_if<IndexExpr>(&e.node)) {
    return 1 + expr_count(*i->index);
  }
  if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
    return 1 + expr_count(*b->lhs) + expr_count(*b->rhs);
  }
  return 1;
}

}  // namespace

std::size_t node_count(const Stmt& stmt) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return 1 + expr_count(*s.value);
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          return 1 + expr_count(*s.index) + expr_count(*s.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return 1 + expr_count(*s.test) + node_count(*s.then_body) +
                 node_count(*s.else_body) + expr_count(*s.assertion);
        } else if constexpr (std::is_same_v<T, LoopStmt>) {
          return 1 + expr_count(*s.entry) + node_count(*s.do_body) +
                 node_count(*s.loop_body) + expr_count(*s.exit);
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          return 1 + node_count(*s.first) + node_count(*s.rest);
        } else {
          return 1;
        }
      },
      stmt.node);
}

}  // namespace rjanus
