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

#include "rjanus/json.hpp"

#include <charconv>
#include <limits>

namespace rjanus {

namespace {

std::int32_t to_int32(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw JsonFormatError(what + ": expected an integer");
  const auto n = v.get<std::int64_t>();
  if (n < std::numeric_limits<std::int32_t>::min() || n > std::numeric_limits<std::int32_t>::max()) {
    throw JsonFormatError(what + ": value out of 32-bit range");
  }
  return static_cast<std::int32_t>(n);
}

std::int32_t parse_index(std::string_view text, const std::string& what) {
  std::int32_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw JsonFormatError(what + ": bad array index '" + std::string(text) + "'");
  }
  return v;
}

Label to_label(const json& v, const char* field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() > 0)) {
    throw JsonFormatError(std::string("'") + field + "' must be a positive label");
  }
  return v.get<Label>();
}

}  // namespace

json store_snapshot(const Store& store) {
  json scalars = json::object();
  json arrays = json::object();
  store.for_each([&](const CellKey& key, std::int32_t v) {
    if (v == 0) return;
    if (key.index) {
      arrays[key.name][std::to_string(*key.index)] = v;
    } else {
      scalars[key.name] = v;
    }
  });
  return json{{"scalars", scalars}, {"arrays", arrays}};
}

json store_flat(const Store& store) {
  json out = json::object();
  store.for_each([&](const CellKey& key, std::int32_t v) {
    if (v != 0) out[key.to_string()] = v;
  });
  return out;
}

Store store_from_json(const json& j) {
  if (!j.is_object()) throw JsonFormatError("store: expected an object");
  Store store;
  const bool snapshot = j.contains("scalars") || j.contains("arrays");
  if (snapshot) {
    const json scalars = j.value("scalars", json::object());
    const json arrays = j.value("arrays", json::object());
    if (!scalars.is_object() || !arrays.is_object()) {
      throw JsonFormatError("store: 'scalars' and 'arrays' must be objects");
    }
    for (const auto& [name, v] : scalars.items()) {
      store = store.assign(CellKey::scalar(name), to_int32(v, name));
    }
    for (const auto& [name, cells] : arrays.items()) {
      if (!cells.is_object()) throw JsonFormatError(name + ": expected an object of cells");
      for (const auto& [idx, v] : cells.items()) {
        store = store.assign(CellKey::element(name, parse_index(idx, name)), to_int32(v, name));
      }
    }
    return store;
  }
  for (const auto& [key, v] : j.items()) {
    const auto open = key.find('[');
    if (open == std::string::npos) {
      store = store.assign(CellKey::scalar(key), to_int32(v, key));
    } else {
      if (key.back() != ']' || open == 0) throw JsonFormatError("bad cell name '" + key + "'");
      const std::string name = key.substr(0, open);
      const auto idx = parse_index(std::string_view(key).substr(open + 1, key.size() - open - 2), key);
      store = store.assign(CellKey::element(name, idx), to_int32(v, key));
    }
  }
  return store;
}

json frame_to_json(const RevFrame& frame) {
  json j{{"kind", to_string(frame.kind)}};
  if (frame.kind == FrameKind::Call || frame.kind == FrameKind::Uncall) {
    j["label"] = frame.l1;
  } else {
    j["l1"] = frame.l1;
    j["l2"] = frame.l2;
  }
  return j;
}

RevFrame frame_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw JsonFormatError("frame: missing 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "call") return RevFrame::call(to_label(j.at("label"), "label"));
  if (kind == "uncall") return RevFrame::uncall(to_label(j.at("label"), "label"));
  for (FrameKind k : {FrameKind::IfTrue, FrameKind::IfFalse, FrameKind::Loop1, FrameKind::Loop2}) {
    if (kind == to_string(k)) {
      if (!j.contains("l1") || !j.contains("l2")) throw JsonFormatError("frame: missing l1/l2");
      return RevFrame{k, to_label(j.at("l1"), "l1"), to_label(j.at("l2"), "l2")};
    }
  }
  throw JsonFormatError("frame: unknown kind '" + kind + "'");
}

json config_to_json(const RevConfig& c) {
  json stack = json::array();
  for (auto it = c.stack.rbegin(); it != c.stack.rend(); ++it) stack.push_back(frame_to_json(*it));
  return json{{"store", store_snapshot(c.store)}, {"prev", c.prev}, {"next", c.next},
              {"stack", stack}};
}

RevConfig config_from_json(const json& j) {
  if (!j.is_object()) throw JsonFormatError("configuration: expected an object");
  for (const char* field : {"prev", "next"}) {
    if (!j.contains(field)) throw JsonFormatError(std::string("configuration: missing '") + field + "'");
  }
  RevConfig c;
  c.store = store_from_json(j.value("store", json::object()));
  c.prev = to_label(j.at("prev"), "prev");
  c.next = to_label(j.at("next"), "next");
  const json stack = j.value("stack", json::array());
  if (!stack.is_array()) throw JsonFormatError("configuration: 'stack' must be an array");
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) c.stack.push_back(frame_from_json(*it));
  return c;
}

json rev_trace_record(std::uint64_t idx, Direction dir, RevRule rule, const RevConfig& c) {
  json j = config_to_json(c);
  return json{{"idx", idx},         {"dir", to_string(dir)}, {"rule", to_string(rule)},
              {"prev", c.prev},     {"next", c.next},        {"stack", j["stack"]},
              {"store", j["store"]}};
}

json small_trace_record(std::uint64_t idx, SmallRule rule, const SmallConfig& c) {
  return json{{"idx", idx},
              {"rule", to_string(rule)},
              {"store", store_snapshot(c.store)},
              {"stackDepth", c.stack.size()}};
}

json cfg_to_json(const LabeledProgram& lp) {
  json units = json::array();
  for (const auto& unit : lp.units()) {
    json edges = json::array();
    for (const auto& [a, b] : unit.flow.edges) edges.push_back({a, b});
    json blocks = json::object();
    for (Label l = unit.start; l <= unit.stop; ++l) blocks[std::to_string(l)] = lp.block_text(l);
    units.push_back(json{{"name", unit.name}, {"edges", edges}, {"blocks", blocks}});
  }
  return json{{"units", units}};
}

json span_to_json(const Span& span) {
  return json{{"begin", span.begin}, {"end", span.end}, {"line", span.line}, {"column", span.column}};
}

json label_spans(const LabeledProgram& lp) {
  json out = json::object();
  for (Label l = 1; l <= lp.label_count(); ++l) {
    const Block& b = lp.block(l);
    out[std::to_string(l)] = span_to_json(b.cond ? b.cond->span : b.stmt->span);
  }
  return out;
}

json error_to_json(const EngineError& err) {
  json j{{"kind", to_string(err.kind())}, {"message", err.what()}, {"span", span_to_json(err.span())}};
  if (err.label) j["label"] = *err.label;
  if (err.direction) j["direction"] = to_string(*err.direction);
  if (err.expected) j["expected"] = *err.expected;
  if (err.actual) j["actual"] = *err.actual;
  return j;
}

}  // namespace rjanus
