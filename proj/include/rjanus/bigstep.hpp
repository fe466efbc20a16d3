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
#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "rjanus/ast.hpp"
#include "rjanus/error.hpp"
#include "rjanus/store.hpp"

namespace rjanus {

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

/// Procedure environment: name → body, plus the inverted bodies used by
/// `uncall`, built on first use and cached. Safe to share between threads.
class ProcEnv {
 public:
  explicit ProcEnv(const Program& program);
  ProcEnv(const ProcEnv&) = delete;
  ProcEnv& operator=(const ProcEnv&) = delete;

  /// Null when `name` is not declared.
  const Procedure* find(std::string_view name) const;
  /// Inverse of `proc.body` (null for an empty body).
  StmtPtr inverse_body(const Procedure& proc) const;

 private:
  std::map<std::string, Procedure, std::less<>> procedures_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, StmtPtr, std::less<>> inverses_;
};

struct ExecOptions {
  /// Maximum number of rule applications before Timeout.
  std::uint64_t fuel = kDefaultFuel;
};

/// Big-step judgement ⟨σ, s⟩ ⇓ σ′. Returns the canonical final store.
/// Throws EngineError (AssertionViolation, DivisionByZero, UndefinedProcedure,
/// Timeout).
Store exec(const Store& store, const StmtPtr& stmt, const ProcEnv& env,
           const ExecOptions& options = {});

/// Runs the main body of `program` from `initial`.
Store exec_program(const Program& program, const Store& initial = {},
                   const ExecOptions& options = {});

}  // namespace rjanus
