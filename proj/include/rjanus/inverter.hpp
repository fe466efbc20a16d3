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

#include <stdexcept>

#include "rjanus/ast.hpp"

namespace rjanus {

/// `+` ↔ `-`, `^` ↦ `^`.
ModOp invert_op(ModOp op);

/// The statement inverter. Every produced statement is a fresh node (new
/// `NodeId`) that keeps the span of the node it was derived from; expression
/// subtrees are shared. Sequences are reversed and re-right-associated;
/// `start` and `stop` swap.
StmtPtr invert_stmt(const StmtPtr& stmt);

class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adds the inverse companion `id⁻¹` (body = inverted body) of every procedure
/// that does not already have one. Idempotent. Throws InversionError when a
/// user procedure is literally named `id_inv` for some declared `id`.
Program invert_program(const Program& program);

/// The inverse program: inverted main body, same procedure declarations.
Program inverse_of(const Program& program);

}  // namespace rjanus
