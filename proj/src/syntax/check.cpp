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

#include <set>

#include "rjanus/syntax.hpp"

namespace rjanus {

namespace {

// True if `name` is read by `expr`, either as a scalar or as an array base.
bool mentions(const Expr& expr, const std::string& name) {
  return std::visit(
      [&](const auto& e) -> bool {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, VarExpr>) {
          return e.name == name;
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          return e.name == name || mentions(*e.index, name);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return mentions(*e.lhs, name) || mentions(*e.rhs, name);
        } else {
          return false;
        }
      },
      expr.node);
}

class Checker {
 public:
  explicit Checker(const Program& program) : program_(program) {
    for (const auto& proc : program.procedures) {
      if (!proc.inverse) declared_.insert(proc.name);
    }
  }

  std::vector<Diagnostic> run() {
    std::set<std::pair<std::string, bool>> seen;
    for (const auto& proc : program_.procedures) {
      if (!seen.emplace(proc.name, proc.inverse).second) {
        error("duplicate procedure '" + proc.surface_name() + "'", proc.span);
      }
      if (!proc.inverse && proc.name.size() > 4 &&
          proc.name.ends_with("_inv") &&
          declared_.contains(proc.name.substr(0, proc.name.size() - 4))) {
        error("procedure '" + proc.name + "' clashes with the generated inverse of '" +
                  proc.name.substr(0, proc.name.size() - 4) + "'",
              proc.span);
      }
    }
    visit(*program_.main);
    for (const auto& proc : program_.procedures) {
      if (proc.body) visit(*proc.body);
    }
    return std::move(diags_);
  }

 private:
  void error(std::string message, Span span) {
    diags_.push_back({Severity::Error, std::move(message), span});
  }

  void visit(const Stmt& stmt) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            if (mentions(*s.value, s.target)) {
              error("'" + s.target + "' occurs on both sides of a reversible update",
                    stmt.span);
            }
          } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
            if (mentions(*s.index, s.target) || mentions(*s.value, s.target)) {
              error("array '" + s.target +
                        "' occurs in the index or right-hand side of its own update",
                    stmt.span);
            }
          } else if constexpr (std::is_same_v<T, CallStmt> ||
                               std::is_same_v<T, UncallStmt>) {
            if (!declared_.contains(s.callee)) {
              error("call of undeclared procedure '" + s.callee + "'", stmt.span);
            }
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            visit(*s.then_body);
            visit(*s.else_body);
          } else if constexpr (std::is_same_v<T, LoopStmt>) {
            visit(*s.do_body);
            visit(*s.loop_body);
          } else if constexpr (std::is_same_v<T, SeqStmt>) {
            visit(*s.first);
            visit(*s.rest);
          }
        },
        stmt.node);
  }

  const Program& program_;
  std::set<std::string, std::less<>> declared_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> check_reversibility(const Program& program) {
  return Checker(program).run();
}

}  // namespace rjanus
