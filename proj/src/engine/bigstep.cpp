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

#include "rjanus/bigstep.hpp"

#include "rjanus/eval.hpp"
#include "rjanus/inverter.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

ProcEnv::ProcEnv(const Program& program) {
  for (const auto& proc : program.procedures) {
    if (!proc.inverse) procedures_.emplace(proc.name, proc);
  }
  for (const auto& proc : program.procedures) {
    if (proc.inverse && procedures_.contains(proc.name)) {
      inverses_.emplace(proc.name, proc.body);
    }
  }
}

const Procedure* ProcEnv::find(std::string_view name) const {
  auto it = procedures_.find(name);
  return it == procedures_.end() ? nullptr : &it->second;
}

StmtPtr ProcEnv::inverse_body(const Procedure& proc) const {
  std::lock_guard lock(mutex_);
  auto it = inverses_.find(proc.name);
  if (it == inverses_.end()) {
    it = inverses_.emplace(proc.name, invert_stmt(proc.body)).first;
  }
  return it->second;
}

namespace {

class BigStep {
 public:
  BigStep(const ProcEnv& env, std::uint64_t fuel) : env_(env), fuel_(fuel) {}

  Store run(Store store, const Stmt& stmt) {
    tick();
    return std::visit(
        [&](const auto& s) -> Store {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            const auto key = CellKey::scalar(s.target);
            const std::int32_t v = eval_expr(store, *s.value);
            return store.assign(key, apply_modop(s.op, store.get(key), v));
          } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
            const auto key = CellKey::element(s.target, eval_expr(store, *s.index));
            const std::int32_t v = eval_expr(store, *s.value);
            return store.assign(key, apply_modop(s.op, store.get(key), v));
          } else if constexpr (std::is_same_v<T, CallStmt>) {
            const Procedure& proc = lookup(s.callee, stmt);
            return proc.body ? run(std::move(store), *proc.body) : store;
          } else if constexpr (std::is_same_v<T, UncallStmt>) {
            const Procedure& proc = lookup(s.callee, stmt);
            StmtPtr body = env_.inverse_body(proc);
            return body ? run(std::move(store), *body) : store;
          } else if constexpr (std::is_same_v<T, SeqStmt>) {
            return run(run(std::move(store), *s.first), *s.rest);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            const bool taken = is_true(eval_expr(store, *s.test));
            store = run(std::move(store), taken ? *s.then_body : *s.else_body);
            require(store, *s.assertion, taken, "if assertion");
            return store;
          } else if constexpr (std::is_same_v<T, LoopStmt>) {
            return run_loop(std::move(store), s);
          } else {
            // skip, and the start/stop markers that behave like it
            return store;
          }
        },
        stmt.node);
  }

 private:
  // LoopMain, then LoopBase / LoopRec unrolled into iteration.
  Store run_loop(Store store, const LoopStmt& loop) {
    require(store, *loop.entry, true, "loop entry assertion");
    store = run(std::move(store), *loop.do_body);
    for (;;) {
      tick();
      if (is_true(eval_expr(store, *loop.exit))) return store;
      store = run(std::move(store), *loop.loop_body);
      require(store, *loop.entry, false, "loop entry assertion");
      store = run(std::move(store), *loop.do_body);
    }
  }

  void require(const Store& store, const Expr& cond, bool expected, std::string_view what) {
    const bool actual = is_true(eval_expr(store, cond));
    if (actual == expected) return;
    EngineError err(ErrorKind::AssertionViolation,
                    std::string(what) + " '" + render(cond) + "' should be " +
                        (expected ? "true" : "false"),
                    cond.span);
    err.expected = expected;
    err.actual = actual;
    throw err;
  }

  const Procedure& lookup(const std::string& name, const Stmt& site) {
    const Procedure* proc = env_.find(name);
    if (!proc) {
      throw EngineError(ErrorKind::UndefinedProcedure,
                        "undefined procedure '" + name + "'", site.span);
    }
    return *proc;
  }

  void tick() {
    if (fuel_ == 0) throw EngineError(ErrorKind::Timeout, "rule budget exhausted");
    --fuel_;
  }

  const ProcEnv& env_;
  std::uint64_t fuel_;
};

}  // namespace

Store exec(const Store& store, const StmtPtr& stmt, const ProcEnv& env,
           const ExecOptions& options) {
  if (!stmt) return store.canonical();
  return BigStep(env, options.fuel).run(store.canonical(), *stmt).canonical();
}

Store exec_program(const Program& program, const Store& initial,
                   const ExecOptions& options) {
  ProcEnv env(program);
  return exec(initial, program.main, env, options);
}

}  // namespace rjanus
