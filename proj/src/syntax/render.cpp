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

#include "rjanus/syntax.hpp"

namespace rjanus {

namespace {

void render_expr(const Expr& expr, std::string& out);

void render_operand(const Expr& child, int parent_prec, bool right, std::string& out) {
  const auto* bin = std::get_if<BinaryExpr>(&child.node);
  const bool parens = bin && (right ? precedence(bin->op) <= parent_prec
                                    : precedence(bin->op) < parent_prec);
  if (parens) out += '(';
  render_expr(child, out);
  if (parens) out += ')';
}

void render_expr(const Expr& expr, std::string& out) {
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ConstExpr>) {
          out += std::to_string(e.value);
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          out += e.name;
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          out += e.name;
          out += '[';
          render_expr(*e.index, out);
          out += ']';
        } else {
          const int prec = precedence(e.op);
          render_operand(*e.lhs, prec, false, out);
          out += ' ';
          out += to_string(e.op);
          out += ' ';
          render_operand(*e.rhs, prec, true, out);
        }
      },
      expr.node);
}

void pad(std::string& out, int indent) { out.append(static_cast<std::size_t>(indent) * 2, ' '); }

void render_stmt(const Stmt& stmt, int indent, std::string& out) {
  if (const auto* seq = stmt.as<SeqStmt>()) {
    render_stmt(*seq->first, indent, out);
    render_stmt(*seq->rest, indent, out);
    return;
  }
  if (const auto* s = stmt.as<IfStmt>()) {
    pad(out, indent);
    out += "if " + render(*s->test) + " then\n";
    render_stmt(*s->then_body, indent + 1, out);
    pad(out, indent);
    out += "else\n";
    render_stmt(*s->else_body, indent + 1, out);
    pad(out, indent);
    out += "fi " + render(*s->assertion) + "\n";
    return;
  }
  if (const auto* s = stmt.as<LoopStmt>()) {
    pad(out, indent);
    out += "from " + render(*s->entry) + " do\n";
    render_stmt(*s->do_body, indent + 1, out);
    pad(out, indent);
    out += "loop\n";
    render_stmt(*s->loop_body, indent + 1, out);
    pad(out, indent);
    out += "until " + render(*s->exit) + "\n";
    return;
  }
  pad(out, indent);
  out += render_block(stmt);
  out += '\n';
}

}  // namespace

std::string render(const Expr& expr) {
  std::string out;
  render_expr(expr, out);
  return out;
}

std::string render(const Stmt& stmt, int indent) {
  std::string out;
  render_stmt(stmt, indent, out);
  return out;
}

std::string render(const Program& program) {
  std::string out = render(*program.main);
  for (const auto& proc : program.procedures) {
    out += "\nprocedure " + proc.surface_name() + "\n";
    if (proc.body) out += render(*proc.body, 1);
  }
  return out;
}

std::string render_block(const Stmt& stmt) {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return s.target + " " + std::string(to_string(s.op)) + " " + render(*s.value);
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          return s.target + "[" + render(*s.index) + "] " + std::string(to_string(s.op)) +
                 " " + render(*s.value);
        } else if constexpr (std::is_same_v<T, CallStmt>) {
          return "call " + s.callee;
        } else if constexpr (std::is_same_v<T, UncallStmt>) {
          return "uncall " + s.callee;
        } else if constexpr (std::is_same_v<T, SkipStmt>) {
          return "skip";
        } else if constexpr (std::is_same_v<T, StartStmt>) {
          return "start";
        } else if constexpr (std::is_same_v<T, StopStmt>) {
          return "stop";
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return "if " + render(*s.test) + " ... fi " + render(*s.assertion);
        } else if constexpr (std::is_same_v<T, LoopStmt>) {
          return "from " + render(*s.entry) + " ... until " + render(*s.exit);
        } else {
          return "...";
        }
      },
      stmt.node);
}

}  // namespace rjanus
