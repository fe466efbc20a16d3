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
#include <vector>

#include "rjanus/bigstep.hpp"
#include "rjanus/cfg.hpp"
#include "rjanus/error.hpp"
#include "rjanus/store.hpp"

/// \file reversible.hpp
/// Program-counter semantics: configurations ⟨σ, ℓ, ℓ′, π⟩ where ℓ is the
/// last executed block and ℓ′ the next one, with a forward and a backward
/// step relation that undo each other.

namespace rjanus {

enum class FrameKind : std::uint8_t { Call, Uncall, IfTrue, IfFalse, Loop1, Loop2 };

std::string_view to_string(FrameKind kind);

/// call(ℓ) / uncall(ℓ) keep the call site in `l1`. The conditional and loop
/// frames keep the test and assertion labels; those identify the node, from
/// which the loop bodies s1 and s2 are recovered through ctx(ℓ1).
struct RevFrame {
  FrameKind kind;
  Label l1 = 0;
  Label l2 = 0;

  static RevFrame call(Label site) { return {FrameKind::Call, site, 0}; }
  static RevFrame uncall(Label site) { return {FrameKind::Uncall, site, 0}; }

  friend bool operator==(const RevFrame&, const RevFrame&) = default;
};

/// The top of the stack is `stack.back()`.
struct RevConfig {
  Store store;
  Label prev = 0;
  Label next = 0;
  std::vector<RevFrame> stack;

  friend bool operator==(const RevConfig&, const RevConfig&) = default;
};

/// Rule names; the same name is used for a forward rule and its backward
/// partner.
enum class RevRule : std::uint8_t {
  AssVar, AssArr, Call, Return1, UnCall, Return2, Skip,
  IfTrue1, IfTrue2, IfFalse1, IfFalse2,
  LoopMain, LoopBase, Loop1, Loop2,
};

std::string_view to_string(RevRule rule);

/// ⟨σ, start(main), ℓ, []⟩ with start(main) ⟶ ℓ.
RevConfig initial(const LabeledProgram& lp, const Store& store = {});

/// block(next) = stop of main and the stack is empty.
bool is_terminal(const LabeledProgram& lp, const RevConfig& c);
/// block(prev) = start of main and the stack is empty.
bool is_initial(const LabeledProgram& lp, const RevConfig& c);

/// One forward step. Throws EngineError (with `direction` set and, for
/// failed conditions, `label`, `expected` and `actual`).
std::pair<RevConfig, RevRule> step_forward(const LabeledProgram& lp, const RevConfig& c);
/// One backward step; inverse of step_forward on reachable configurations.
std::pair<RevConfig, RevRule> step_backward(const LabeledProgram& lp, const RevConfig& c);

std::pair<RevConfig, RevRule> step(const LabeledProgram& lp, const RevConfig& c, Direction dir);

struct RevStep {
  RevRule rule;
  RevConfig config;  // configuration after the step
};

struct RevRunOptions {
  std::uint64_t fuel = kDefaultFuel;
  /// Keep every intermediate configuration in the result.
  bool record = true;
};

struct RevRunResult {
  RevConfig final;
  std::vector<RevStep> trace;
  std::uint64_t steps = 0;
};

/// Steps forward until is_terminal; Timeout when fuel runs out.
RevRunResult run_forward(const LabeledProgram& lp, RevConfig c, const RevRunOptions& options = {});
/// Steps backward until is_initial; Timeout when fuel runs out.
RevRunResult run_backward(const LabeledProgram& lp, RevConfig c, const RevRunOptions& options = {});

}  // namespace rjanus
