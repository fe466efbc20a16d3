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

#include "support.hpp"

#include "rjanus/reversible.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rjanus/bigstep.hpp"
#include "rjanus/error.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus::testing {

Program parse_or_throw(std::string_view source) {
  ParseResult result = parse(source);
  if (!result.ok()) {
    std::string msg = "parse failed:";
    for (const auto& d : result.diagnostics) msg += "\n  " + format_diagnostic(d);
    msg += "\n--- source ---\n" + std::string(source);
    throw std::runtime_error(msg);
  }
  return std::move(*result.program);
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& file : std::filesystem::directory_iterator(RJANUS_CORPUS_DIR)) {
      if (file.path().extension() != ".ja") continue;
      std::ifstream in(file.path());
      std::stringstream text;
      text << in.rdbuf();
      out.push_back({file.path().stem().string(), text.str(), parse_or_throw(text.str())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no corpus program named " + std::string(name));
}

// ---------------------------------------------------------------------------
// ProgramGenerator

namespace {

const std::vector<std::string> kVars = {"x0", "x1", "x2", "x3", "x4"};
const std::string kArray = "a";

std::string pad(int indent) { return std::string(2 * indent, ' '); }

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::none_of(a.begin(), a.end(), [&](const auto& x) { return b.contains(x); });
}

// Variables an expression text mentions (identifiers only).
std::set<std::string> mentioned(const std::string& text) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      out.insert(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

ProgramGenerator::ProgramGenerator(std::uint64_t seed) : ProgramGenerator(seed, Options{}) {}

ProgramGenerator::ProgramGenerator(std::uint64_t seed, Options options)
    : rng_(seed), options_(options) {}

int ProgramGenerator::pick(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool ProgramGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

std::string ProgramGenerator::expr(int depth, const std::set<std::string>& exclude) {
  std::vector<std::string> vars;
  for (const auto& v : kVars) {
    if (!exclude.contains(v)) vars.push_back(v);
  }
  const bool array_ok = !exclude.contains(kArray);
  if (depth <= 0 || chance(0.3)) {
    const int kind = pick(0, 9);
    if (kind < 4 || (vars.empty() && !array_ok)) return std::to_string(pick(-9, 20));
    if (kind < 9 || !array_ok) {
      if (vars.empty()) return std::to_string(pick(0, 9));
      return vars[pick(0, static_cast<int>(vars.size()) - 1)];
    }
    return kArray + "[" + std::to_string(pick(0, 3)) + "]";
  }
  static const char* kOps[] = {"+", "-", "^", "*", "&", "|", "<", ">", "<=", ">=", "==", "!=", "&&", "||"};
  if (chance(0.1)) {
    const int divisor = pick(1, 5) * (chance(0.5) ? 1 : -1);
    return "(" + expr(depth - 1, exclude) + (chance(0.5) ? " / " : " % ") + std::to_string(divisor) + ")";
  }
  return "(" + expr(depth - 1, exclude) + " " + kOps[pick(0, 13)] + " " + expr(depth - 1, exclude) + ")";
}

std::string ProgramGenerator::block(int depth, const std::set<std::string>& frozen, int indent,
                                    std::set<std::string>& mods) {
  std::string out;
  const int n = pick(1, options_.max_block);
  for (int i = 0; i < n; ++i) out += statement(depth, frozen, indent, mods);
  return out;
}

std::string ProgramGenerator::statement(int depth, const std::set<std::string>& frozen, int indent,
                                        std::set<std::string>& mods) {
  const std::string p = pad(indent);
  std::vector<int> callees;
  for (int j = 0; j < current_proc_; ++j) {
    if (disjoint(proc_mods_[j], frozen)) callees.push_back(j);
  }
  std::vector<std::string> targets;
  for (const auto& v : kVars) {
    if (!frozen.contains(v)) targets.push_back(v);
  }

  const int roll = pick(0, 99);
  if (roll < 35 && !targets.empty()) {
    const std::string x = targets[pick(0, static_cast<int>(targets.size()) - 1)];
    static const char* kMods[] = {"+=", "-=", "^="};
    mods.insert(x);
    return p + x + " " + kMods[pick(0, 2)] + " " + expr(2, {x}) + "\n";
  }
  if (roll < 45 && !frozen.contains(kArray)) {
    static const char* kMods[] = {"+=", "-=", "^="};
    mods.insert(kArray);
    const std::string index = chance(0.7) ? std::to_string(pick(0, 3)) : expr(1, {kArray});
    return p + kArray + "[" + index + "] " + kMods[pick(0, 2)] + " " + expr(2, {kArray}) + "\n";
  }
  if (roll < 62 && depth > 0) {
    const std::string test = expr(pick(1, 2), {});
    std::set<std::string> inner = frozen;
    for (const auto& v : mentioned(test)) inner.insert(v);
    std::string out = p + "if " + test + " then\n" + block(depth - 1, inner, indent + 1, mods);
    if (chance(0.85)) out += p + "else\n" + block(depth - 1, inner, indent + 1, mods);
    return out + p + "fi " + test + "\n";
  }
  if (roll < 74 && depth > 0) {
    const std::string c = "c" + std::to_string(counters_++);
    const int n = pick(1, options_.max_iterations);
    std::set<std::string> inner = frozen;
    inner.insert(c);
    mods.insert(c);
    std::string out = p + "from " + c + " == 0 do\n";
    if (chance(0.7)) out += block(depth - 1, inner, indent + 1, mods);
    out += pad(indent + 1) + c + " += 1\n";
    if (chance(0.8)) out += p + "loop\n" + block(depth - 1, inner, indent + 1, mods);
    out += p + "until " + c + " == " + std::to_string(n) + "\n";
    return out + p + c + " -= " + std::to_string(n) + "\n";
  }
  if (roll < 92 && !callees.empty()) {
    const int j = callees[pick(0, static_cast<int>(callees.size()) - 1)];
    mods.insert(proc_mods_[j].begin(), proc_mods_[j].end());
    return p + (chance(0.6) ? "call p" : "uncall p") + std::to_string(j) + "\n";
  }
  return p + "skip\n";
}

std::string ProgramGenerator::broken_statement(int indent) {
  const std::string p = pad(indent);
  switch (pick(0, 4)) {
    case 0: {
      const std::string test = expr(1, {});
      return p + "if " + test + " then\n" + pad(indent + 1) + "skip\n" + p + "else\n" +
             pad(indent + 1) + "skip\n" + p + "fi (" + test + ") == 0\n";
    }
    case 1: {
      const std::string c = "c" + std::to_string(counters_++);
      const int n = pick(2, 4);
      return p + "from " + c + " >= 0 do\n" + pad(indent + 1) + c + " += 1\n" + p +
             "until " + c + " == " + std::to_string(n) + "\n";
    }
    case 2:
      return p + kVars[pick(0, 4)] + " += 7 / (x0 - x0)\n";
    case 3:
      return p + "a[1] ^= (x1 + 1) % 0\n";
    default:
      return p + "call nowhere\n";
  }
}

std::string ProgramGenerator::next() {
  counters_ = 0;
  proc_mods_.clear();
  const int procs = pick(0, options_.max_procedures);
  std::vector<std::string> bodies;
  for (int j = 0; j < procs; ++j) {
    current_proc_ = j;
    std::set<std::string> mods;
    bodies.push_back(chance(0.05) ? "" : block(options_.max_depth, {}, 1, mods));
    proc_mods_.push_back(std::move(mods));
  }
  current_proc_ = procs;
  std::string main;
  for (const auto& v : kVars) {
    if (chance(0.6)) main += v + " += " + std::to_string(pick(-5, 12)) + "\n";
  }
  std::set<std::string> mods;
  main += block(options_.max_depth, {}, 0, mods);
  if (options_.broken) {
    // Put the failing construct somewhere among main's top-level statements.
    std::vector<std::string> lines;
    std::stringstream in(main);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!lines[i].starts_with(" ") && !lines[i].starts_with("else") &&
          !lines[i].starts_with("fi") && !lines[i].starts_with("loop") &&
          !lines[i].starts_with("until")) {
        cuts.push_back(i);
      }
    }
    const std::size_t at = cuts[pick(0, static_cast<int>(cuts.size()) - 1)];
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i == at) out += broken_statement(0);
      out += lines[i] + "\n";
    }
    main = out;
  }
  std::string out = main;
  for (int j = 0; j < procs; ++j) out += "\nprocedure p" + std::to_string(j) + "\n" + bodies[j];
  return out;
}

std::vector<Program> generate_programs(ProgramGenerator& gen, std::size_t count, std::uint64_t fuel) {
  std::vector<Program> out;
  while (out.size() < count) {
    Program program = parse_or_throw(gen.next());
    try {
      exec_program(program, {}, ExecOptions{fuel});
      out.push_back(std::move(program));
    } catch (const EngineError&) {
      // too long (or a generator bug, which the engine tests would surface)
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unconstrained trees

namespace {

const char* kNames[] = {"x", "y", "z", "w"};

std::string random_name(std::mt19937_64& rng) {
  return kNames[std::uniform_int_distribution<int>(0, 3)(rng)];
}

}  // namespace

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> roll(0, 9);
  if (depth <= 0 || roll(rng) < 3) {
    switch (roll(rng) % 4) {
      case 0: return make_const(std::uniform_int_distribution<std::int32_t>(-50, 50)(rng));
      case 1: return make_const(roll(rng) < 5 ? INT32_MIN : INT32_MAX);
      case 2: return make_index("a", random_expr(rng, depth - 1));
      default: return make_var(random_name(rng));
    }
  }
  const auto op = static_cast<BinOp>(std::uniform_int_distribution<int>(0, 15)(rng));
  return make_binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

StmtPtr random_statement(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> roll(0, 9);
  const auto op = static_cast<ModOp>(std::uniform_int_distribution<int>(0, 2)(rng));
  if (depth <= 0 || roll(rng) < 4) {
    switch (roll(rng) % 5) {
      case 0: return make_assign(random_name(rng), op, random_expr(rng, 2));
      case 1: return make_array_assign("a", random_expr(rng, 1), op, random_expr(rng, 2));
      case 2: return make_call(roll(rng) < 5 ? "p" : "q");
      case 3: return make_uncall(roll(rng) < 5 ? "p" : "q");
      default: return make_skip();
    }
  }
  switch (roll(rng) % 3) {
    case 0: {
      std::vector<StmtPtr> parts;
      const int n = std::uniform_int_distribution<int>(2, 4)(rng);
      // Splice nested sequences so the result is a right comb, like parsed code.
      for (int i = 0; i < n; ++i) {
        for (auto& leaf : flatten_seq(random_statement(rng, depth - 1))) parts.push_back(leaf);
      }
      return make_seq(parts);
    }
    case 1:
      return make_if(random_expr(rng, 2), random_statement(rng, depth - 1),
                     random_statement(rng, depth - 1), random_expr(rng, 2));
    default:
      return make_loop(random_expr(rng, 2), random_statement(rng, depth - 1),
                       random_statement(rng, depth - 1), random_expr(rng, 2));
  }
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void correspond(const Labeling& ls, const Stmt& s, const Labeling& li, const Stmt& inv,
                std::map<Label, Label>& out) {
  if (s.is<SeqStmt>()) {
    // flatten_seq wants a pointer; the statements are owned by the caller.
    const StmtPtr sp(std::shared_ptr<const Stmt>(), &s);
    const StmtPtr ip(std::shared_ptr<const Stmt>(), &inv);
    const auto a = flatten_seq(sp);
    const auto b = flatten_seq(ip);
    if (a.size() != b.size()) throw std::logic_error("sequence lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) correspond(ls, *a[i], li, *b[b.size() - 1 - i], out);
    return;
  }
  if (const auto* x = s.as<IfStmt>()) {
    const auto* y = inv.as<IfStmt>();
    if (!y) throw std::logic_error("if without an inverse if");
    const auto [l1, l2] = ls.cond_labels(s);
    const auto [m1, m2] = li.cond_labels(inv);
    out[l1] = m2;
    out[l2] = m1;
    correspond(ls, *x->then_body, li, *y->then_body, out);
    correspond(ls, *x->else_body, li, *y->else_body, out);
    return;
  }
  if (const auto* x = s.as<LoopStmt>()) {
    const auto* y = inv.as<LoopStmt>();
    if (!y) throw std::logic_error("loop without an inverse loop");
    const auto [l1, l2] = ls.cond_labels(s);
    const auto [m1, m2] = li.cond_labels(inv);
    out[l1] = m2;
    out[l2] = m1;
    correspond(ls, *x->do_body, li, *y->do_body, out);
    correspond(ls, *x->loop_body, li, *y->loop_body, out);
    return;
  }
  out[ls.label_of(s)] = li.label_of(inv);
}

struct TraceParser {
  std::span<const SmallRule> t;
  std::size_t i = 0;

  bool at(SmallRule r) const { return i < t.size() && t[i] == r; }
  bool eat(SmallRule r) {
    if (!at(r)) return false;
    ++i;
    return true;
  }

  bool bal() {
    if (eat(SmallRule::AssVarS) || eat(SmallRule::AssArrS)) return true;
    if (eat(SmallRule::CallS) || eat(SmallRule::UnCallS)) return bal();
    if (eat(SmallRule::Seq1)) return bal() && eat(SmallRule::Seq2) && bal();
    if (eat(SmallRule::IfTrue1)) return bal() && eat(SmallRule::IfTrue2);
    if (eat(SmallRule::IfFalse1)) return bal() && eat(SmallRule::IfFalse2);
    if (eat(SmallRule::LoopMainS)) return bal() && loop();
    return true;  // ε
  }

  bool loop() {
    if (eat(SmallRule::LoopBaseS)) return true;
    if (eat(SmallRule::Loop1)) return bal() && eat(SmallRule::Loop2) && bal() && loop();
    return false;
  }
};

}  // namespace

std::map<Label, Label> block_correspondence(const Labeling& ls, const Stmt& s, const Labeling& li,
                                            const Stmt& inv) {
  std::map<Label, Label> out;
  correspond(ls, s, li, inv, out);
  return out;
}

bool is_balanced_trace(std::span<const SmallRule> trace) {
  TraceParser p{trace};
  return p.bal() && p.i == trace.size();
}

std::uint64_t check_step_reversal(const LabeledProgram& lp, std::mt19937_64& rng,
                               std::string& failure, std::uint64_t walk_length) {
  const RevRunResult run = run_forward(lp, initial(lp));
  std::vector<RevConfig> configs{initial(lp)};
  std::vector<RevRule> rules;
  for (const auto& s : run.trace) {
    configs.push_back(s.config);
    rules.push_back(s.rule);
  }
  std::uint64_t checked = 0;
  auto describe = [](const RevConfig& c) {
    return to_string(c.store) + " " + std::to_string(c.prev) + "->" + std::to_string(c.next) +
           " depth " + std::to_string(c.stack.size());
  };
  for (std::size_t i = 0; i + 1 < configs.size(); ++i) {
    const auto [fwd, r1] = step_forward(lp, configs[i]);
    const auto [bwd, r2] = step_backward(lp, configs[i + 1]);
    ++checked;
    if (!(fwd == configs[i + 1]) || !(bwd == configs[i]) || r1 != rules[i] || r2 != rules[i]) {
      failure = "step " + std::to_string(i) + " does not invert at " + describe(configs[i]);
      return checked;
    }
  }
  // Mixed walk: position moves back and forth along the run.
  std::size_t pos = 0;
  RevConfig c = configs[0];
  for (std::uint64_t k = 0; k < walk_length && configs.size() > 1; ++k) {
    const bool forward = pos == 0 || (pos + 1 < configs.size() && rng() % 2 == 0);
    c = step(lp, c, forward ? Direction::Forward : Direction::Backward).first;
    pos = forward ? pos + 1 : pos - 1;
    ++checked;
    if (!(c == configs[pos])) {
      failure = "mixed walk diverged at position " + std::to_string(pos) + ": " + describe(c);
      return checked;
    }
  }
  return checked;
}

std::vector<StmtPtr> statement_nodes(const StmtPtr& stmt) {
  std::vector<StmtPtr> out;
  std::vector<StmtPtr> pending{stmt};
  while (!pending.empty()) {
    StmtPtr s = pending.back();
    pending.pop_back();
    if (!s) continue;
    out.push_back(s);
    if (const auto* q = s->as<SeqStmt>()) {
      pending.push_back(q->rest);
      pending.push_back(q->first);
    } else if (const auto* q = s->as<IfStmt>()) {
      pending.push_back(q->else_body);
      pending.push_back(q->then_body);
    } else if (const auto* q = s->as<LoopStmt>()) {
      pending.push_back(q->loop_body);
      pending.push_back(q->do_body);
    }
  }
  return out;
}

namespace {

ExprPtr negated(const ExprPtr& e) { return make_binary(BinOp::Eq, e, make_const(0), e->span); }

// Copy of `s` with the `target`-th assertion (pre-order) negated; `seen`
// counts the assertions passed so far.
StmtPtr mutate_one(const StmtPtr& s, int target, int& seen) {
  if (!s) return s;
  if (const auto* q = s->as<SeqStmt>()) {
    StmtPtr first = mutate_one(q->first, target, seen);
    return make_seq_pair(first, mutate_one(q->rest, target, seen), s->span);
  }
  if (const auto* q = s->as<IfStmt>()) {
    StmtPtr then_body = mutate_one(q->then_body, target, seen);
    StmtPtr else_body = mutate_one(q->else_body, target, seen);
    ExprPtr assertion = seen++ == target ? negated(q->assertion) : q->assertion;
    return make_if(q->test, then_body, else_body, assertion, s->span);
  }
  if (const auto* q = s->as<LoopStmt>()) {
    ExprPtr entry = seen++ == target ? negated(q->entry) : q->entry;
    StmtPtr do_body = mutate_one(q->do_body, target, seen);
    StmtPtr loop_body = mutate_one(q->loop_body, target, seen);
    return make_loop(entry, do_body, loop_body, q->exit, s->span);
  }
  return s;
}

}  // namespace

std::vector<Program> mutate_assertions(const Program& program) {
  std::vector<Program> out;
  for (int target = 0;; ++target) {
    int seen = 0;
    Program p = program;
    p.main = mutate_one(program.main, target, seen);
    for (auto& proc : p.procedures) proc.body = mutate_one(proc.body, target, seen);
    if (target >= seen) return out;
    out.push_back(std::move(p));
  }
}

}  // namespace rjanus::testing
