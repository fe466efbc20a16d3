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

#include "rjanus/ast.hpp"
#include "rjanus/error.hpp"
#include "rjanus/store.hpp"

namespace rjanus {

/// Interpretation of a binary operator on 32-bit two's-complement values.
///
/// `+ - *` wrap; `/` truncates toward zero and `%` takes the dividend's sign
/// (INT_MIN / -1 wraps to INT_MIN, INT_MIN % -1 is 0). Comparisons and the
/// logical `&&`/`||` yield 1 or 0; `& | ^` are bitwise.
/// Throws EngineError(DivisionByZero) for a zero divisor.
std::int32_t apply_binop(BinOp op, std::int32_t lhs, std::int32_t rhs);

/// Interpretation of an update operator: `current op operand`, wrapping.
std::int32_t apply_modop(ModOp op, std::int32_t current, std::int32_t operand);

/// Evaluates `expr` under `store`. Never modifies the store. Division by zero
/// is reported with the span of the offending operator node.
std::int32_t eval_expr(const Store& store, const Expr& expr);

inline bool is_true(std::int32_t v) { return v != 0; }
inline bool is_false(std::int32_t v) { return v == 0; }

}  // namespace rjanus
