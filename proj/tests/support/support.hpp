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
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rjanus/ast.hpp"
#include "rjanus/cfg.hpp"
#include "rjanus/reversible.hpp"
#include "rjanus/smallstep.hpp"

namespace rjanus::testing {

struct CorpusEntry {
  std::string name;  // file stem
  std::string source;
  Program program;
};

/// Every tests/corpus/*.ja, sorted by name. Parse failures abort.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(std::string_view name);

/// Parses leniently and throws std::runtime_error with the diagnostics on
/// failure.
Program parse_or_throw(std::string_view source);

/// Random assertion-correct programs, emitted as source text.
///
/// If tests only read variables that neither branch (nor any procedure
/// called from a branch) modifies, and repeat the test as the assertion.
/// Loops are counted: `from c == 0 do s1 c += 1 loop s2 until c == N`
/// followed by `c -= N`, with a counter that nothing else touches.
/// Procedures only call procedures declared before them, so every program
/// terminates.
class ProgramGenerator {
 public:
  struct Options {
    int max_procedures = 3;
    int max_depth = 2;
    int max_block = 4;
    int max_iterations = 3;
    /// Insert one construct at the top level of main that must fail
    /// (violated assertion, division by zero, or undefined procedure).
    bool broken = false;
  };

  explicit ProgramGenerator(std::uint64_t seed);
  ProgramGenerator(std::uint64_t seed, Options options);

  /// Source text of a fresh program. Not filtered: callers that need a
  /// bounded run should execute it with a fuel limit.
  std::string next();

 private:
  std::string block(int depth, const std::set<std::string>& frozen, int indent,
                    std::set<std::string>& mods);
  std::string statement(int depth, const std::set<std::string>& frozen, int indent,
                        std::set<std::string>& mods);
  std::string expr(int depth, const std::set<std::string>& exclude);
  std::string broken_statement(int indent);
  int pick(int lo, int hi);
  bool chance(double p);

  std::mt19937_64 rng_;
  Options options_;
  int counters_ = 0;
  int current_proc_ = 0;
  std::vector<std::set<std::string>> proc_mods_;
};

/// Draws bigstep-terminating programs from `gen` (fuel `fuel`), skipping
/// those that fail or run out of fuel.
std::vector<Program> generate_programs(ProgramGenerator& gen, std::size_t count,
                                       std::uint64_t fuel = 200'000);

/// Arbitrary statement trees (no semantic constraints), for structural
/// properties. Leaves are assignments, array updates, calls, uncalls, skips.
StmtPtr random_statement(std::mt19937_64& rng, int depth);
ExprPtr random_expr(std::mt19937_64& rng, int depth);

/// Maps every label of `s` (under `ls`) to the label of the corresponding
/// block of `inv` = I⟦s⟧ (under `li`): elementary blocks map to their
/// inverted copies, the test of an if/from maps to the assertion of its
/// inverse and vice versa. Sequences are matched after flattening.
std::map<Label, Label> block_correspondence(const Labeling& ls, const Stmt& s,
                                            const Labeling& li, const Stmt& inv);

/// Recognizes the balanced small-step traces:
///   bal  ::= ε | AssVarS | AssArrS | CallS bal | UnCallS bal
///          | Seq1 bal Seq2 bal | IfTrue1 bal IfTrue2 | IfFalse1 bal IfFalse2
///          | LoopMainS bal loop
///   loop ::= LoopBaseS | Loop1 bal Loop2 bal loop
/// The grammar is LL(1): every production starts with a distinct opener, and
/// ε is chosen whenever the next rule is not one. The whole trace must be a
/// single `bal`.
bool is_balanced_trace(std::span<const SmallRule> trace);

/// Every statement node reachable from `stmt`, itself included.
std::vector<StmtPtr> statement_nodes(const StmtPtr& stmt);

/// One variant of `program` per `fi` assertion and `from` entry assertion
/// (in main and in every procedure), with that single condition `e` replaced
/// by `(e) = 0`.
std::vector<Program> mutate_assertions(const Program& program);

/// Checks that forward and backward steps undo each other along the forward
/// run of `lp` from the empty store, then along a random walk that mixes both
/// directions. Returns the number of checked step pairs; on a mismatch fills
/// `failure` and stops.
std::uint64_t check_step_reversal(const LabeledProgram& lp, std::mt19937_64& rng,
                               std::string& failure, std::uint64_t walk_length = 2000);

}  // namespace rjanus::testing
