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
#include <vector>

#include "rjanus/reversible.hpp"

namespace rjanus::testing {

/// One row of the reference Sum3 forward run: the rule applied and the
/// configuration it produces. `stack` is listed top first.
struct GoldenRow {
  RevRule rule;
  std::int32_t i, n, total;
  Label prev, next;
  std::vector<RevFrame> stack;
};

inline RevFrame if_true(Label a, Label b) { return {FrameKind::IfTrue, a, b}; }
inline RevFrame if_false(Label a, Label b) { return {FrameKind::IfFalse, a, b}; }
inline RevFrame loop1(Label a, Label b) { return {FrameKind::Loop1, a, b}; }
inline RevFrame loop2(Label a, Label b) { return {FrameKind::Loop2, a, b}; }

inline const std::vector<GoldenRow>& sum3_forward_rows() {
  using R = RevRule;
  const RevFrame c3 = RevFrame::call(3);
  static const std::vector<GoldenRow> rows = {
      {R::AssVar, 0, 3, 0, 2, 3, {}},
      {R::Call, 0, 3, 0, 5, 6, {c3}},
      {R::AssVar, 1, 3, 0, 6, 7, {c3}},
      {R::LoopMain, 1, 3, 0, 7, 8, {loop1(7, 13), c3}},
      {R::IfFalse1, 1, 3, 0, 8, 10, {if_false(8, 11), loop1(7, 13), c3}},
      {R::Skip, 1, 3, 0, 10, 11, {if_false(8, 11), loop1(7, 13), c3}},
      {R::IfFalse2, 1, 3, 0, 11, 13, {loop1(7, 13), c3}},
      {R::Loop1, 1, 3, 0, 13, 12, {loop2(7, 13), c3}},
      {R::AssVar, 2, 3, 0, 12, 7, {loop2(7, 13), c3}},
      {R::Loop2, 2, 3, 0, 7, 8, {loop1(7, 13), c3}},
      {R::IfFalse1, 2, 3, 0, 8, 10, {if_false(8, 11), loop1(7, 13), c3}},
      {R::Skip, 2, 3, 0, 10, 11, {if_false(8, 11), loop1(7, 13), c3}},
      {R::IfFalse2, 2, 3, 0, 11, 13, {loop1(7, 13), c3}},
      {R::Loop1, 2, 3, 0, 13, 12, {loop2(7, 13), c3}},
      {R::AssVar, 3, 3, 0, 12, 7, {loop2(7, 13), c3}},
      {R::Loop2, 3, 3, 0, 7, 8, {loop1(7, 13), c3}},
      {R::IfTrue1, 3, 3, 0, 8, 9, {if_true(8, 11), loop1(7, 13), c3}},
      {R::AssVar, 3, 3, 3, 9, 11, {if_true(8, 11), loop1(7, 13), c3}},
      {R::IfTrue2, 3, 3, 3, 11, 13, {loop1(7, 13), c3}},
      {R::LoopBase, 3, 3, 3, 13, 14, {c3}},
      {R::AssVar, 3, 6, 3, 14, 15, {c3}},
      {R::Return1, 3, 6, 3, 3, 4, {}},
  };
  return rows;
}

inline RevConfig to_config(const GoldenRow& row) {
  RevConfig c;
  if (row.i) c.store = c.store.assign(CellKey::scalar("i"), row.i);
  if (row.n) c.store = c.store.assign(CellKey::scalar("n"), row.n);
  if (row.total) c.store = c.store.assign(CellKey::scalar("total"), row.total);
  c.prev = row.prev;
  c.next = row.next;
  c.stack.assign(row.stack.rbegin(), row.stack.rend());
  return c;
}

}  // namespace rjanus::testing
