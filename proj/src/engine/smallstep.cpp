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

#include "rjanus/smallstep.hpp"

#include "rjanus/eval.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

std::string_view to_string(SmallRule rule) {
  switch (rule) {
    case SmallRule::AssVarS: return "AssVarS";
    case SmallRule::AssArrS: return "AssArrS";
    case SmallRule::CallS: return "CallS";
    case SmallRule::UnCallS: return "UnCallS";
    case SmallRule::Seq1: return "Seq1";
    case SmallRule::Seq2: return "Seq2";
    case SmallRule::IfTrue1: return "IfTrue1";
    case SmallRule::IfTrue2: return "IfTrue2";
    case SmallRule::IfFalse1: return "IfFalse1";
    case SmallRule::IfFalse2: return "IfFalse2";
    case SmallRule::LoopMainS: return "LoopMainS";
    case SmallRule::LoopBaseS: return "LoopBaseS";
    case SmallRule::Loop1: return "Loop1";
    case SmallRule::Loop2: return "Loop2";
  }
  return "?";
}

namespace {

const StmtPtr& skip_stmt() {
  static const StmtPtr skip = make_skip();
  return skip;
}

StmtPtr or_skip(const StmtPtr& stmt) { return stmt ? stmt : skip_stmt(); }

[[noreturn]] void violation(const Expr& cond, bool expected, std::string_view what) {
  EngineError err(ErrorKind::AssertionViolation,
                  std::string(what) + " '" + render(cond) + "' should be " +
                      (expected ? "true" : "false"),
                  cond.span);
  err.expected = expected;
  err.actual = !expected;
  throw err;
}

[[noreturn]] void stuck(const std::string& why) {
  throw EngineError(ErrorKind::StuckConfiguration, why);
}

bool truth(const Store& store, const ExprPtr& e) { return is_true(eval_expr(store, *e)); }

// control = skip: the rule is chosen by the stack top.
SmallRule pop_frame(SmallConfig& c) {
  if (c.stack.empty()) stuck("no rule applies to a terminal configuration");
  Frame top = std::move(c.stack.back());
  c.stack.pop_back();
  return std::visit(
      [&](auto& f) -> SmallRule {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SeqFrame>) {
          c.control = f.rest;
          return SmallRule::Seq2;
        } else if constexpr (std::is_same_v<T, IfTrueFrame>) {
          if (!truth(c.store, f.assertion)) violation(*f.assertion, true, "if assertion");
          return SmallRule::IfTrue2;
        } else if constexpr (std::is_same_v<T, IfFalseFrame>) {
          if (truth(c.store, f.assertion)) violation(*f.assertion, false, "if assertion");
          return SmallRule::IfFalse2;
        } else if constexpr (std::is_same_v<T, Loop1Frame>) {
          const auto& loop = *f.loop->template as<LoopStmt>();
          if (truth(c.store, loop.exit)) return SmallRule::LoopBaseS;
          c.control = or_skip(loop.loop_body);
          c.stack.push_back(Loop2Frame{f.loop});
          return SmallRule::Loop1;
        } else {
          const auto& loop = *f.loop->template as<LoopStmt>();
          if (truth(c.store, loop.entry)) violation(*loop.entry, false, "loop entry assertion");
          c.control = or_skip(loop.do_body);
          c.stack.push_back(Loop1Frame{f.loop});
          return SmallRule::Loop2;
        }
      },
      top);
}

const Procedure& lookup(const ProcEnv& env, const std::string& name, const Stmt& site) {
  const Procedure* proc = env.find(name);
  if (!proc) {
    throw EngineError(ErrorKind::UndefinedProcedure, "undefined procedure '" + name + "'",
                      site.span);
  }
  return *proc;
}

}  // namespace

SmallConfig small_initial(const Store& store, const StmtPtr& stmt) {
  return SmallConfig{store.canonical(), or_skip(stmt), {}};
}

bool is_terminal(const SmallConfig& config) {
  return config.stack.empty() && config.control->is<SkipStmt>();
}

std::pair<SmallConfig, SmallRule> step(SmallConfig c, const ProcEnv& env) {
  const StmtPtr control = c.control;
  const Stmt& stmt = *control;
  const SmallRule rule = std::visit(
      [&](const auto& s) -> SmallRule {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AssignStmt>) {
          const auto key = CellKey::scalar(s.target);
          const std::int32_t v = eval_expr(c.store, *s.value);
          c.store = c.store.assign(key, apply_modop(s.op, c.store.get(key), v));
          c.control = skip_stmt();
          return SmallRule::AssVarS;
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          const auto key = CellKey::element(s.target, eval_expr(c.store, *s.index));
          const std::int32_t v = eval_expr(c.store, *s.value);
          c.store = c.store.assign(key, apply_modop(s.op, c.store.get(key), v));
          c.control = skip_stmt();
          return SmallRule::AssArrS;
        } else if constexpr (std::is_same_v<T, CallStmt>) {
          c.control = or_skip(lookup(env, s.callee, stmt).body);
          return SmallRule::CallS;
        } else if constexpr (std::is_same_v<T, UncallStmt>) {
          c.control = or_skip(env.inverse_body(lookup(env, s.callee, stmt)));
          return SmallRule::UnCallS;
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          c.control = s.first;
          c.stack.push_back(SeqFrame{s.rest});
          return SmallRule::Seq1;
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          if (truth(c.store, s.test)) {
            c.control = or_skip(s.then_body);
            c.stack.push_back(IfTrueFrame{s.assertion});
            return SmallRule::IfTrue1;
          }
          c.control = or_skip(s.else_body);
          c.stack.push_back(IfFalseFrame{s.assertion});
          return SmallRule::IfFalse1;
        } else if constexpr (std::is_same_v<T, LoopStmt>) {
          if (!truth(c.store, s.entry)) violation(*s.entry, true, "loop entry assertion");
          c.control = or_skip(s.do_body);
          c.stack.push_back(Loop1Frame{control});
          return SmallRule::LoopMainS;
        } else if constexpr (std::is_same_v<T, SkipStmt>) {
          return pop_frame(c);
        } else {
          stuck("start/stop markers are not executable by the stack machine");
        }
      },
      stmt.node);
  return {std::move(c), rule};
}

SmallRunResult run_small(const Store& store, const StmtPtr& stmt, const ProcEnv& env,
                         const ExecOptions& options, const SmallObserver& observer) {
  SmallRunResult result;
  SmallConfig config = small_initial(store, stmt);
  std::uint64_t fuel = options.fuel;
  while (!is_terminal(config)) {
    if (fuel == 0) throw EngineError(ErrorKind::Timeout, "rule budget exhausted");
    --fuel;
    auto [next, rule] = step(std::move(config), env);
    config = std::move(next);
    result.trace.push_back(rule);
    if (observer) observer(config, rule);
  }
  result.store = config.store.canonical();
  return result;
}

}  // namespace rjanus
