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
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rjanus/cfg.hpp"
#include "rjanus/error.hpp"
#include "rjanus/reversible.hpp"
#include "rjanus/smallstep.hpp"
#include "rjanus/store.hpp"

/// \file json.hpp
/// JSON encodings shared by the CLI, the trace writers and the debug service.

namespace rjanus {

using nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"scalars": {"x": 1}, "arrays": {"a": {"3": 7}}}
json store_snapshot(const Store& store);
/// {"x": 1, "a[3]": 7}
json store_flat(const Store& store);
/// Accepts either encoding above. Throws JsonFormatError.
Store store_from_json(const json& j);

json frame_to_json(const RevFrame& frame);
RevFrame frame_from_json(const json& j);

/// {"store": snapshot, "prev": ℓ, "next": ℓ′, "stack": [frames, top first]}
json config_to_json(const RevConfig& c);
RevConfig config_from_json(const json& j);

/// {"idx", "dir", "rule", "prev", "next", "stack", "store"}
json rev_trace_record(std::uint64_t idx, Direction dir, RevRule rule, const RevConfig& c);
/// {"idx", "rule", "store", "stackDepth"}
json small_trace_record(std::uint64_t idx, SmallRule rule, const SmallConfig& c);

/// {"units": [{"name", "edges": [[a, b], ...], "blocks": {"ℓ": text}}]}
json cfg_to_json(const LabeledProgram& lp);
/// {"ℓ": {"begin", "end", "line", "column"}}
json label_spans(const LabeledProgram& lp);
json span_to_json(const Span& span);

/// {"kind", "message", "span", ...optional "label", "direction", "expected", "actual"}
json error_to_json(const EngineError& err);

}  // namespace rjanus
