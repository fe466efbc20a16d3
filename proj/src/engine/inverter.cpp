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

#include "rjanus/inverter.hpp"

#include <algorithm>

namespace rjanus {

ModOp invert_op(ModOp op) {
  switch (op) {
    case ModOp::Plus: return ModOp::Minus;
    case ModOp::Minus: return ModOp::Plus;
    case ModOp::Xor: return ModOp::Xor;
  }
  return op;
}

StmtPtr invert_stmt(const StmtPtr& stmt) {
  if (!stmt) return nullptr;
  const Span span = stmt->span;
  return std::visit(
      [&](const auto& s) -> StmtPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return make_assign(s.target, invert_op(s.op), s.value, span);
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          return make_array_assign(s.target, s.index, invert_op(s.op), s.value, span);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return make_if(s.assertion, invert_stmt(s.then_body), invert_stmt(s.else_body),
                         s.test, span);
        } else if constexpr (std::is_same_v<T, LoopStmt>) {
          return make_loop(s.exit, invert_stmt(s.do_body), invert_stmt(s.loop_body),
                           s.entry, span);
        } else if constexpr (std::is_same_v<T, CallStmt>) {
          return make_uncall(s.callee, span);
        } else if constexpr (std::is_same_v<T, UncallStmt>) {
          return make_call(s.callee, span);
        } else if constexpr (std::is_same_v<T, SkipStmt>) {
          return make_skip(span);
        } else if constexpr (std::is_same_v<T, StartStmt>) {
          return make_stop();
        } else if constexpr (std::is_same_v<T, StopStmt>) {
          return make_start();
        } else {
          auto parts = flatten_seq(stmt);
          std::reverse(parts.begin(), parts.end());
          for (auto& part : parts) part = invert_stmt(part);
          return make_seq(parts);
        }
      },
      stmt->node);
}

Program invert_program(const Program& program) {
  for (const auto& proc : program.procedures) {
    if (proc.inverse || !proc.name.ends_with("_inv")) continue;
    const auto base = proc.name.substr(0, proc.name.size() - 4);
    if (program.find(base) != nullptr) {
      throw InversionError("procedure '" + proc.name +
                           "' clashes with the generated inverse of '" + base + "'");
    }
  }
  Program out = program;
  for (const auto& proc : program.procedures) {
    if (program.find(proc.name, !proc.inverse) != nullptr) continue;
    out.procedures.push_back(
        Procedure{proc.name, !proc.inverse, invert_stmt(proc.body), proc.span});
  }
  return out;
}

Program inverse_of(const Program& program) {
  Program out = program;
  out.main = invert_stmt(program.main);
  return out;
}

}  // namespace rjanus
