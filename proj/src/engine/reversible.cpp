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

#include "rjanus/reversible.hpp"

#include <string>

#include "rjanus/eval.hpp"
#include "rjanus/inverter.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

std::string_view to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::Call: return "call";
    case FrameKind::Uncall: return "uncall";
    case FrameKind::IfTrue: return "if_true";
    case FrameKind::IfFalse: return "if_false";
    case FrameKind::Loop1: return "loop1";
    case FrameKind::Loop2: return "loop2";
  }
  return "?";
}

std::string_view to_string(RevRule rule) {
  switch (rule) {
    case RevRule::AssVar: return "AssVar";
    case RevRule::AssArr: return "AssArr";
    case RevRule::Call: return "Call";
    case RevRule::Return1: return "Return1";
    case RevRule::UnCall: return "UnCall";
    case RevRule::Return2: return "Return2";
    case RevRule::Skip: return "Skip";
    case RevRule::IfTrue1: return "IfTrue1";
    case RevRule::IfTrue2: return "IfTrue2";
    case RevRule::IfFalse1: return "IfFalse1";
    case RevRule::IfFalse2: return "IfFalse2";
    case RevRule::LoopMain: return "LoopMain";
    case RevRule::LoopBase: return "LoopBase";
    case RevRule::Loop1: return "Loop1";
    case RevRule::Loop2: return "Loop2";
  }
  return "?";
}

RevConfig initial(const LabeledProgram& lp, const Store& store) {
  const Label start = lp.main().start;
  return RevConfig{store.canonical(), start, lp.unique_succ(start), {}};
}

bool is_terminal(const LabeledProgram& lp, const RevConfig& c) {
  return c.stack.empty() && c.next == lp.main().stop;
}

bool is_initial(const LabeledProgram& lp, const RevConfig& c) {
  return c.stack.empty() && c.prev == lp.main().start;
}

namespace {

class Stepper {
 public:
  Stepper(const LabeledProgram& lp, const RevConfig& c, Direction dir)
      : lp_(lp), c_(c), dir_(dir) {}

  std::pair<RevConfig, RevRule> forward() {
    const Label l = c_.next;
    check_label(l);
    const Block& b = lp_.block(l);
    switch (b.kind) {
      case BlockKind::Assign:
      case BlockKind::ArrayAssign: {
        const RevRule rule = apply_assign(*b.stmt, false);
        return advance(l, lp_.unique_succ(l), rule);
      }
      case BlockKind::Skip:
        return advance(l, lp_.unique_succ(l), RevRule::Skip);
      case BlockKind::Call:
      case BlockKind::Uncall: {
        const bool un = b.kind == BlockKind::Uncall;
        const Unit& unit = callee(b);
        c_.stack.push_back(un ? RevFrame::uncall(l) : RevFrame::call(l));
        return advance(unit.start, lp_.unique_succ(unit.start),
                       un ? RevRule::UnCall : RevRule::Call);
      }
      case BlockKind::Stop: {
        if (c_.stack.empty()) stuck("no forward rule at a terminal configuration");
        const RevFrame top = c_.stack.back();
        if (top.kind != FrameKind::Call && top.kind != FrameKind::Uncall) {
          stuck("procedure exit with a " + std::string(to_string(top.kind)) + " frame on top");
        }
        expect_callee(top, l);
        c_.stack.pop_back();
        return advance(top.l1, lp_.unique_succ(top.l1),
                       top.kind == FrameKind::Call ? RevRule::Return1 : RevRule::Return2);
      }
      case BlockKind::Start:
        stuck("start label cannot be the next block");
      case BlockKind::Test:
        return b.in_loop() ? loop_test_fwd(l, b) : if_test_fwd(l, b);
      case BlockKind::Assertion:
        return b.in_loop() ? loop_assertion_fwd(l, b) : if_assertion_fwd(l, b);
    }
    stuck("unknown block");
  }

  std::pair<RevConfig, RevRule> backward() {
    const Label l = c_.prev;
    check_label(l);
    const Block& b = lp_.block(l);
    switch (b.kind) {
      case BlockKind::Assign:
      case BlockKind::ArrayAssign: {
        const RevRule rule = apply_assign(*b.stmt, true);
        return advance(lp_.unique_pred(l), l, rule);
      }
      case BlockKind::Skip:
        return advance(lp_.unique_pred(l), l, RevRule::Skip);
      case BlockKind::Call:
      case BlockKind::Uncall: {
        const bool un = b.kind == BlockKind::Uncall;
        const Unit& unit = callee(b);
        c_.stack.push_back(un ? RevFrame::uncall(l) : RevFrame::call(l));
        return advance(lp_.unique_pred(unit.stop), unit.stop,
                       un ? RevRule::Return2 : RevRule::Return1);
      }
      case BlockKind::Start: {
        if (c_.stack.empty()) stuck("no backward rule at an initial configuration");
        const RevFrame top = c_.stack.back();
        if (top.kind != FrameKind::Call && top.kind != FrameKind::Uncall) {
          stuck("procedure entry with a " + std::string(to_string(top.kind)) + " frame on top");
        }
        expect_callee(top, l);
        c_.stack.pop_back();
        return advance(lp_.unique_pred(top.l1), top.l1,
                       top.kind == FrameKind::Call ? RevRule::Call : RevRule::UnCall);
      }
      case BlockKind::Stop:
        stuck("stop label cannot be the last executed block");
      case BlockKind::Test:
        return b.in_loop() ? loop_test_bwd(l, b) : if_test_bwd(l, b);
      case BlockKind::Assertion:
        return b.in_loop() ? loop_assertion_bwd(l, b) : if_assertion_bwd(l, b);
    }
    stuck("unknown block");
  }

 private:
  // --- forward, conditionals and loops

  std::pair<RevConfig, RevRule> if_test_fwd(Label l1, const Block& b) {
    const auto& s = *b.stmt->as<IfStmt>();
    const Label l2 = lp_.cond_labels(*b.stmt).second;
    if (truth(b)) {
      c_.stack.push_back({FrameKind::IfTrue, l1, l2});
      return advance(l1, lp_.entry(*s.then_body), RevRule::IfTrue1);
    }
    c_.stack.push_back({FrameKind::IfFalse, l1, l2});
    return advance(l1, lp_.entry(*s.else_body), RevRule::IfFalse1);
  }

  std::pair<RevConfig, RevRule> if_assertion_fwd(Label l2, const Block& b) {
    const Label l1 = lp_.cond_labels(*b.stmt).first;
    const RevFrame top = expect_top({FrameKind::IfTrue, FrameKind::IfFalse}, l1, l2);
    const bool want = top.kind == FrameKind::IfTrue;
    require(b, l2, want, "if assertion");
    c_.stack.pop_back();
    return advance(l2, lp_.unique_succ(l2), want ? RevRule::IfTrue2 : RevRule::IfFalse2);
  }

  std::pair<RevConfig, RevRule> loop_test_fwd(Label l1, const Block& b) {
    const auto& s = *b.stmt->as<LoopStmt>();
    const Label l2 = lp_.cond_labels(*b.stmt).second;
    if (top_is(FrameKind::Loop2, l1, l2)) {
      require(b, l1, false, "loop entry assertion");
      c_.stack.back().kind = FrameKind::Loop1;
      return advance(l1, lp_.entry(*s.do_body), RevRule::Loop2);
    }
    require(b, l1, true, "loop entry assertion");
    c_.stack.push_back({FrameKind::Loop1, l1, l2});
    return advance(l1, lp_.entry(*s.do_body), RevRule::LoopMain);
  }

  std::pair<RevConfig, RevRule> loop_assertion_fwd(Label l2, const Block& b) {
    const auto& s = *b.stmt->as<LoopStmt>();
    const Label l1 = lp_.cond_labels(*b.stmt).first;
    expect_top({FrameKind::Loop1}, l1, l2);
    const Label body2 = lp_.entry(*s.loop_body);
    if (truth(b)) {
      c_.stack.pop_back();
      return advance(l2, other_than(lp_.succ(l2), body2, l2), RevRule::LoopBase);
    }
    c_.stack.back().kind = FrameKind::Loop2;
    return advance(l2, body2, RevRule::Loop1);
  }

  // --- backward, conditionals and loops

  std::pair<RevConfig, RevRule> if_test_bwd(Label l1, const Block& b) {
    const Label l2 = lp_.cond_labels(*b.stmt).second;
    const RevFrame top = expect_top({FrameKind::IfTrue, FrameKind::IfFalse}, l1, l2);
    const bool want = top.kind == FrameKind::IfTrue;
    require(b, l1, want, "if test");
    c_.stack.pop_back();
    return advance(lp_.unique_pred(l1), l1, want ? RevRule::IfTrue1 : RevRule::IfFalse1);
  }

  std::pair<RevConfig, RevRule> if_assertion_bwd(Label l2, const Block& b) {
    const auto& s = *b.stmt->as<IfStmt>();
    const Label l1 = lp_.cond_labels(*b.stmt).first;
    if (truth(b)) {
      c_.stack.push_back({FrameKind::IfTrue, l1, l2});
      return advance(lp_.exit(*s.then_body), l2, RevRule::IfTrue2);
    }
    c_.stack.push_back({FrameKind::IfFalse, l1, l2});
    return advance(lp_.exit(*s.else_body), l2, RevRule::IfFalse2);
  }

  std::pair<RevConfig, RevRule> loop_test_bwd(Label l1, const Block& b) {
    const auto& s = *b.stmt->as<LoopStmt>();
    const Label l2 = lp_.cond_labels(*b.stmt).second;
    expect_top({FrameKind::Loop1}, l1, l2);
    const Label exit2 = lp_.exit(*s.loop_body);
    if (truth(b)) {
      c_.stack.pop_back();
      return advance(other_than(lp_.pred(l1), exit2, l1), l1, RevRule::LoopMain);
    }
    c_.stack.back().kind = FrameKind::Loop2;
    return advance(exit2, l1, RevRule::Loop2);
  }

  std::pair<RevConfig, RevRule> loop_assertion_bwd(Label l2, const Block& b) {
    const auto& s = *b.stmt->as<LoopStmt>();
    const Label l1 = lp_.cond_labels(*b.stmt).first;
    const Label exit1 = lp_.exit(*s.do_body);
    if (top_is(FrameKind::Loop2, l1, l2)) {
      require(b, l2, false, "loop exit test");
      c_.stack.back().kind = FrameKind::Loop1;
      return advance(exit1, l2, RevRule::Loop1);
    }
    require(b, l2, true, "loop exit test");
    c_.stack.push_back({FrameKind::Loop1, l1, l2});
    return advance(exit1, l2, RevRule::LoopBase);
  }

  // --- helpers

  RevRule apply_assign(const Stmt& stmt, bool undo) {
    if (const auto* s = stmt.as<AssignStmt>()) {
      const auto key = CellKey::scalar(s->target);
      const std::int32_t v = eval_expr(c_.store, *s->value);
      const ModOp op = undo ? invert_op(s->op) : s->op;
      c_.store = c_.store.assign(key, apply_modop(op, c_.store.get(key), v));
      return RevRule::AssVar;
    }
    const auto& s = *stmt.as<ArrayAssignStmt>();
    const auto key = CellKey::element(s.target, eval_expr(c_.store, *s.index));
    const std::int32_t v = eval_expr(c_.store, *s.value);
    const ModOp op = undo ? invert_op(s.op) : s.op;
    c_.store = c_.store.assign(key, apply_modop(op, c_.store.get(key), v));
    return RevRule::AssArr;
  }

  const Unit& callee(const Block& b) {
    const bool un = b.kind == BlockKind::Uncall;
    const std::string& name = un ? b.stmt->as<UncallStmt>()->callee : b.stmt->as<CallStmt>()->callee;
    const Unit* unit = lp_.find_unit(name, un);
    if (!unit) {
      EngineError err(ErrorKind::UndefinedProcedure, "undefined procedure '" + name + "'",
                      b.stmt->span);
      err.direction = dir_;
      throw err;
    }
    return *unit;
  }

  // The frame's call site must invoke the unit that `boundary` belongs to.
  void expect_callee(const RevFrame& frame, Label boundary) {
    const Block& site = lp_.block(frame.l1);
    const bool ok = (site.kind == BlockKind::Call || site.kind == BlockKind::Uncall) &&
                    &callee(site) == &lp_.unit_of(boundary) &&
                    (site.kind == BlockKind::Uncall) == (frame.kind == FrameKind::Uncall);
    if (!ok) stuck("call frame does not match the procedure being left");
  }

  bool top_is(FrameKind kind, Label l1, Label l2) const {
    return !c_.stack.empty() && c_.stack.back() == RevFrame{kind, l1, l2};
  }

  RevFrame expect_top(std::initializer_list<FrameKind> kinds, Label l1, Label l2) {
    for (FrameKind k : kinds) {
      if (top_is(k, l1, l2)) return c_.stack.back();
    }
    stuck("no frame for the condition at labels " + std::to_string(l1) + "/" +
          std::to_string(l2) + " on top of the stack");
  }

  static Label other_than(const std::vector<Label>& candidates, Label excluded, Label at) {
    for (Label l : candidates) {
      if (l != excluded) return l;
    }
    throw std::logic_error("label " + std::to_string(at) + " has no other neighbour");
  }

  bool truth(const Block& b) const { return is_true(eval_expr(c_.store, *b.cond)); }

  void require(const Block& b, Label l, bool expected, std::string_view what) {
    const bool actual = truth(b);
    if (actual == expected) return;
    EngineError err(ErrorKind::AssertionViolation,
                    std::string(what) + " '" + render(*b.cond) + "' at label " +
                        std::to_string(l) + " should be " + (expected ? "true" : "false"),
                    b.cond->span);
    err.expected = expected;
    err.actual = actual;
    err.label = l;
    err.direction = dir_;
    throw err;
  }

  void check_label(Label l) const {
    if (!lp_.contains(l)) stuck("label " + std::to_string(l) + " does not exist");
  }

  [[noreturn]] void stuck(const std::string& why) const {
    EngineError err(ErrorKind::StuckConfiguration, why);
    err.direction = dir_;
    throw err;
  }

  std::pair<RevConfig, RevRule> advance(Label prev, Label next, RevRule rule) {
    c_.prev = prev;
    c_.next = next;
    return {std::move(c_), rule};
  }

  const LabeledProgram& lp_;
  RevConfig c_;
  Direction dir_;
};

RevRunResult run(const LabeledProgram& lp, RevConfig c, const RevRunOptions& options,
                 Direction dir) {
  RevRunResult result;
  auto done = [&](const RevConfig& cur) {
    return dir == Direction::Forward ? is_terminal(lp, cur) : is_initial(lp, cur);
  };
  while (!done(c)) {
    if (result.steps == options.fuel) {
      EngineError err(ErrorKind::Timeout, "step budget exhausted");
      err.direction = dir;
      throw err;
    }
    auto [next, rule] = step(lp, c, dir);
    c = std::move(next);
    ++result.steps;
    if (options.record) result.trace.push_back({rule, c});
  }
  result.final = std::move(c);
  return result;
}

}  // namespace

std::pair<RevConfig, RevRule> step_forward(const LabeledProgram& lp, const RevConfig& c) {
  return Stepper(lp, c, Direction::Forward).forward();
}

std::pair<RevConfig, RevRule> step_backward(const LabeledProgram& lp, const RevConfig& c) {
  return Stepper(lp, c, Direction::Backward).backward();
}

std::pair<RevConfig, RevRule> step(const LabeledProgram& lp, const RevConfig& c, Direction dir) {
  return dir == Direction::Forward ? step_forward(lp, c) : step_backward(lp, c);
}

RevRunResult run_forward(const LabeledProgram& lp, RevConfig c, const RevRunOptions& options) {
  return run(lp, std::move(c), options, Direction::Forward);
}

RevRunResult run_backward(const LabeledProgram& lp, RevConfig c, const RevRunOptions& options) {
  return run(lp, std::move(c), options, Direction::Backward);
}

}  // namespace rjanus
