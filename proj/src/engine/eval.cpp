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

#include "rjanus/eval.hpp"

#include <limits>

#include "rjanus/syntax.hpp"

namespace rjanus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AssertionViolation: return "AssertionViolation";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UndefinedProcedure: return "UndefinedProcedure";
    case ErrorKind::StuckConfiguration: return "StuckConfiguration";
    case ErrorKind::Timeout: return "Timeout";
  }
  return "?";
}

std::string_view to_string(Direction dir) {
  return dir == Direction::Forward ? "fwd" : "bwd";
}

namespace {

std::int32_t wrap(std::uint32_t v) { return static_cast<std::int32_t>(v); }
std::uint32_t bits(std::int32_t v) { return static_cast<std::uint32_t>(v); }

constexpr std::int32_t kMin = std::numeric_limits<std::int32_t>::min();

}  // namespace

std::int32_t apply_binop(BinOp op, std::int32_t lhs, std::int32_t rhs) {
  switch (op) {
    case BinOp::Add: return wrap(bits(lhs) + bits(rhs));
    case BinOp::Sub: return wrap(bits(lhs) - bits(rhs));
    case BinOp::Mul: return wrap(bits(lhs) * bits(rhs));
    case BinOp::Xor: return lhs ^ rhs;
    case BinOp::Div:
      if (rhs == 0) throw EngineError(ErrorKind::DivisionByZero, "division by zero");
      if (lhs == kMin && rhs == -1) return kMin;
      return lhs / rhs;
    case BinOp::Mod:
      if (rhs == 0) throw EngineError(ErrorKind::DivisionByZero, "modulo by zero");
      if (rhs == -1) return 0;
      return lhs % rhs;
    case BinOp::BitAnd: return lhs & rhs;
    case BinOp::BitOr: return lhs | rhs;
    case BinOp::LogAnd: return (lhs != 0 && rhs != 0) ? 1 : 0;
    case BinOp::LogOr: return (lhs != 0 || rhs != 0) ? 1 : 0;
    case BinOp::Lt: return lhs < rhs ? 1 : 0;
    case BinOp::Gt: return lhs > rhs ? 1 : 0;
    case BinOp::Le: return lhs <= rhs ? 1 : 0;
    case BinOp::Ge: return lhs >= rhs ? 1 : 0;
    case BinOp::Eq: return lhs == rhs ? 1 : 0;
    case BinOp::Ne: return lhs != rhs ? 1 : 0;
  }
  return 0;
}

std::int32_t apply_modop(ModOp op, std::int32_t current, std::int32_t operand) {
  switch (op) {
    case ModOp::Plus: return wrap(bits(current) + bits(operand));
    case ModOp::Minus: return wrap(bits(current) - bits(operand));
    case ModOp::Xor: return current ^ operand;
  }
  return current;
}

std::int32_t eval_expr(const Store& store, const Expr& expr) {
  return std::visit(
      [&](const auto& e) -> std::int32_t {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ConstExpr>) {
          return e.value;
        } else if constexpr (std::is_same_v<T, VarExpr>) {
          return store.get(CellKey::scalar(e.name));
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          return store.get(CellKey::element(e.name, eval_expr(store, *e.index)));
        } else {
          const std::int32_t lhs = eval_expr(store, *e.lhs);
          const std::int32_t rhs = eval_expr(store, *e.rhs);
          if ((e.op == BinOp::Div || e.op == BinOp::Mod) && rhs == 0) {
            throw EngineError(ErrorKind::DivisionByZero,
                              "division by zero in '" + render(expr) + "'",
                              expr.span);
          }
          return apply_binop(e.op, lhs, rhs);
        }
      },
      expr.node);
}

}  // namespace rjanus
