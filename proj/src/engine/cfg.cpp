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

#include "rjanus/cfg.hpp"

#include <stdexcept>

#include "rjanus/inverter.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

void Labeling::add(const StmtPtr& stmt, std::uint32_t unit) {
  auto own = [&](BlockKind kind) {
    if (!first_label_.emplace(stmt->id, next_label()).second) {
      throw std::logic_error("statement node labeled twice");
    }
    blocks_.push_back(Block{kind, stmt, nullptr, unit});
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeqStmt>) {
          add(s.first, unit);
          add(s.rest, unit);
        } else if constexpr (std::is_same_v<T, IfStmt> || std::is_same_v<T, LoopStmt>) {
          constexpr bool is_if = std::is_same_v<T, IfStmt>;
          if (!first_label_.emplace(stmt->id, next_label()).second) {
            throw std::logic_error("statement node labeled twice");
          }
          if constexpr (is_if) {
            blocks_.push_back(Block{BlockKind::Test, stmt, s.test, unit});
            add(s.then_body, unit);
            add(s.else_body, unit);
            assertion_label_.emplace(stmt->id, next_label());
            blocks_.push_back(Block{BlockKind::Assertion, stmt, s.assertion, unit});
          } else {
            blocks_.push_back(Block{BlockKind::Test, stmt, s.entry, unit});
            add(s.do_body, unit);
            add(s.loop_body, unit);
            assertion_label_.emplace(stmt->id, next_label());
            blocks_.push_back(Block{BlockKind::Assertion, stmt, s.exit, unit});
          }
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          own(BlockKind::Assign);
        } else if constexpr (std::is_same_v<T, ArrayAssignStmt>) {
          own(BlockKind::ArrayAssign);
        } else if constexpr (std::is_same_v<T, CallStmt>) {
          own(BlockKind::Call);
        } else if constexpr (std::is_same_v<T, UncallStmt>) {
          own(BlockKind::Uncall);
        } else if constexpr (std::is_same_v<T, SkipStmt>) {
          own(BlockKind::Skip);
        } else if constexpr (std::is_same_v<T, StartStmt>) {
          own(BlockKind::Start);
        } else {
          own(BlockKind::Stop);
        }
      },
      stmt->node);
}

Label Labeling::label_of(const Stmt& stmt) const {
  auto it = first_label_.find(stmt.id);
  if (it == first_label_.end()) throw std::logic_error("statement is not labeled");
  return it->second;
}

std::pair<Label, Label> Labeling::cond_labels(const Stmt& stmt) const {
  auto it = assertion_label_.find(stmt.id);
  if (it == assertion_label_.end()) throw std::logic_error("not a labeled if/from node");
  return {label_of(stmt), it->second};
}

Label Labeling::entry(const Stmt& stmt) const {
  if (const auto* seq = stmt.as<SeqStmt>()) return entry(*seq->first);
  return label_of(stmt);
}

Label Labeling::exit(const Stmt& stmt) const {
  if (const auto* seq = stmt.as<SeqStmt>()) return exit(*seq->rest);
  if (stmt.is<IfStmt>() || stmt.is<LoopStmt>()) return cond_labels(stmt).second;
  return label_of(stmt);
}

void Labeling::flow_into(const Stmt& stmt, Cfg& out) const {
  if (const auto* seq = stmt.as<SeqStmt>()) {
    flow_into(*seq->first, out);
    flow_into(*seq->rest, out);
    out.edges.emplace(exit(*seq->first), entry(*seq->rest));
  } else if (const auto* s = stmt.as<IfStmt>()) {
    const auto [l1, l2] = cond_labels(stmt);
    flow_into(*s->then_body, out);
    flow_into(*s->else_body, out);
    out.edges.emplace(l1, entry(*s->then_body));
    out.edges.emplace(exit(*s->then_body), l2);
    out.edges.emplace(l1, entry(*s->else_body));
    out.edges.emplace(exit(*s->else_body), l2);
  } else if (const auto* s = stmt.as<LoopStmt>()) {
    const auto [l1, l2] = cond_labels(stmt);
    flow_into(*s->do_body, out);
    flow_into(*s->loop_body, out);
    out.edges.emplace(l1, entry(*s->do_body));
    out.edges.emplace(exit(*s->do_body), l2);
    out.edges.emplace(l2, entry(*s->loop_body));
    out.edges.emplace(exit(*s->loop_body), l1);
  }
}

Cfg Labeling::flow(const Stmt& stmt) const {
  Cfg out;
  flow_into(stmt, out);
  return out;
}

Cfg Labeling::flow_inv(const Stmt& stmt) const {
  Cfg out;
  for (const auto& [a, b] : flow(stmt).edges) out.edges.emplace(b, a);
  return out;
}

std::shared_ptr<const LabeledProgram> LabeledProgram::build(const Program& program) {
  std::shared_ptr<LabeledProgram> lp(new LabeledProgram());
  lp->program_ = invert_program(program);

  auto wrap = [](const StmtPtr& body) {
    std::vector<StmtPtr> parts{make_start()};
    if (body) parts.push_back(body);
    parts.push_back(make_stop());
    return make_seq(parts);
  };
  auto add_unit = [&](std::string name, std::string procedure, bool inverse,
                      const StmtPtr& body) {
    Unit unit{std::move(name), std::move(procedure), inverse, wrap(body), 0, 0, {}};
    unit.start = lp->labeling_.next_label();
    lp->labeling_.add(unit.body, static_cast<std::uint32_t>(lp->units_.size()));
    unit.stop = lp->labeling_.exit(*unit.body);
    unit.flow = lp->labeling_.flow(*unit.body);
    lp->units_.push_back(std::move(unit));
  };

  add_unit("main", "", false, lp->program_.main);
  for (bool inverse : {false, true}) {
    for (const auto& proc : lp->program_.procedures) {
      if (proc.inverse == inverse) add_unit(proc.surface_name(), proc.name, inverse, proc.body);
    }
  }

  const std::size_t n = lp->labeling_.size() + 1;
  lp->succ_.assign(n, {});
  lp->pred_.assign(n, {});
  for (const auto& unit : lp->units_) {
    for (const auto& [a, b] : unit.flow.edges) {
      lp->succ_[a].push_back(b);
      lp->pred_[b].push_back(a);
    }
  }
  return lp;
}

const Unit* LabeledProgram::find_unit(const std::string& name, bool inverse) const {
  for (const auto& unit : units_) {
    if (!unit.procedure.empty() && unit.procedure == name && unit.inverse == inverse) {
      return &unit;
    }
  }
  return nullptr;
}

const Stmt* LabeledProgram::ctx(Label l) const {
  const Block& b = block(l);
  return b.is_condition() ? b.stmt.get() : nullptr;
}

Label LabeledProgram::unique_succ(Label l) const {
  const auto& s = succ(l);
  if (s.size() != 1) throw std::logic_error("label " + std::to_string(l) + " has no unique successor");
  return s.front();
}

Label LabeledProgram::unique_pred(Label l) const {
  const auto& p = pred(l);
  if (p.size() != 1) throw std::logic_error("label " + std::to_string(l) + " has no unique predecessor");
  return p.front();
}

std::string LabeledProgram::block_text(Label l) const {
  const Block& b = block(l);
  return b.cond ? render(*b.cond) : render_block(*b.stmt);
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const LabeledProgram& lp) {
  std::string out;
  for (const auto& unit : lp.units()) {
    out += "digraph \"" + dot_escape(unit.name) + "\" {\n  node [shape=box];\n";
    for (Label l = unit.start; l <= unit.stop; ++l) {
      out += "  " + std::to_string(l) + " [label=\"" + std::to_string(l) + ": " +
             dot_escape(lp.block_text(l)) + "\"];\n";
    }
    for (const auto& [a, b] : unit.flow.edges) {
      out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace rjanus
