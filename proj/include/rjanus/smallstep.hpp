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
#include <functional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rjanus/ast.hpp"
#include "rjanus/bigstep.hpp"
#include "rjanus/store.hpp"

namespace rjanus {

/// Continuation frames of the stack-based machine.
struct SeqFrame {
  StmtPtr rest;
};
struct IfTrueFrame {
  ExprPtr assertion;
};
struct IfFalseFrame {
  ExprPtr assertion;
};
/// Both loop frames refer to the originating loop node, which carries e1, s1,
/// e2 and s2.
struct Loop1Frame {
  StmtPtr loop;
};
struct Loop2Frame {
  StmtPtr loop;
};

using Frame = std::variant<SeqFrame, IfTrueFrame, IfFalseFrame, Loop1Frame, Loop2Frame>;

/// ⟨σ, s, π⟩. The top of π is `stack.back()`.
struct SmallConfig {
  Store store;
  StmtPtr control;
  std::vector<Frame> stack;
};

enum class SmallRule : std::uint8_t {
  AssVarS, AssArrS, CallS, UnCallS, Seq1, Seq2,
  IfTrue1, IfTrue2, IfFalse1, IfFalse2,
  LoopMainS, LoopBaseS, Loop1, Loop2,
};

std::string_view to_string(SmallRule rule);

/// ⟨σ, s, []⟩ (a null statement is taken as `skip`).
SmallConfig small_initial(const Store& store, const StmtPtr& stmt);

/// ⟨σ, skip, []⟩
bool is_terminal(const SmallConfig& config);

/// One transition. Throws EngineError: AssertionViolation when the guard of
/// the only candidate rule fails, StuckConfiguration when no rule matches
/// (including on a terminal configuration), DivisionByZero,
/// UndefinedProcedure.
std::pair<SmallConfig, SmallRule> step(SmallConfig config, const ProcEnv& env);

struct SmallRunResult {
  Store store;  // canonical
  std::vector<SmallRule> trace;
};

/// Called after every step with the new configuration.
using SmallObserver = std::function<void(const SmallConfig&, SmallRule)>;

/// Steps to the terminal configuration; Timeout after `options.fuel` steps.
SmallRunResult run_small(const Store& store, const StmtPtr& stmt, const ProcEnv& env,
                         const ExecOptions& options = {},
                         const SmallObserver& observer = nullptr);

}  // namespace rjanus
