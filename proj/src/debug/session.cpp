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

#include "rjanus/debug/session.hpp"

#include <cstdlib>
#include <random>

#include "rjanus/inverter.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus::debug {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::Stepped: return "stepped";
    case StopReason::Terminal: return "terminal";
    case StopReason::Initial: return "initial";
    case StopReason::Breakpoint: return "breakpoint";
    case StopReason::Error: return "error";
  }
  return "?";
}

SessionOptions options_from_env() {
  SessionOptions options;
  if (const char* ttl = std::getenv("RJANUS_SESSION_TTL_SECS")) {
    char* end = nullptr;
    const long secs = std::strtol(ttl, &end, 10);
    if (end != ttl && *end == '\0' && secs > 0) options.ttl = std::chrono::seconds(secs);
  }
  return options;
}

Session::Session(std::string id, std::shared_ptr<const LabeledProgram> lp)
    : id_(std::move(id)), lp_(std::move(lp)), current_(initial(*lp_)) {}

Session::Outcome Session::advance(Direction dir, std::uint64_t count) {
  Outcome out;
  const bool fwd = dir == Direction::Forward;
  auto at_boundary = [&] {
    return fwd ? is_terminal(*lp_, current_) : is_initial(*lp_, current_);
  };
  const StopReason boundary = fwd ? StopReason::Terminal : StopReason::Initial;
  while (true) {
    if (at_boundary()) {
      out.reason = boundary;
      return out;
    }
    if (out.steps == count) {
      out.reason = StopReason::Stepped;
      return out;
    }
    try {
      auto [next, rule] = step(*lp_, current_, dir);
      current_ = std::move(next);
      history_.push_back({dir, rule, current_});
      ++out.steps;
    } catch (const EngineError& err) {
      out.reason = StopReason::Error;
      out.error = error_to_json(err);
      return out;
    }
    if (at_boundary()) {
      out.reason = boundary;
      return out;
    }
    if (breakpoints_.contains(fwd ? current_.next : current_.prev)) {
      out.reason = StopReason::Breakpoint;
      return out;
    }
  }
}

json Session::snapshot() const {
  return json{{"session", id_},
              {"config", config_to_json(current_)},
              {"terminal", is_terminal(*lp_, current_)},
              {"initial", is_initial(*lp_, current_)},
              {"historyLength", history_.size()},
              {"breakpoints", breakpoints_}};
}

SessionManager::SessionManager(SessionOptions options) : options_(std::move(options)) {}

std::chrono::steady_clock::time_point SessionManager::now() const {
  return options_.clock ? options_.clock() : std::chrono::steady_clock::now();
}

std::string SessionManager::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  const std::uint64_t a = rng(), b = rng() ^ ++counter_;
  for (std::uint64_t v : {a, b}) {
    for (int i = 0; i < 16; ++i) id += kHex[(v >> (4 * i)) & 0xf];
  }
  return id;
}

std::shared_ptr<Session> SessionManager::get(const std::string& id) {
  evict_expired();
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ProtocolError(errc::kUnknownSession, "unknown session '" + id + "'");
  }
  it->second->last_used_ = now();
  return it->second;
}

std::size_t SessionManager::evict_expired() {
  std::lock_guard lock(mutex_);
  const auto cutoff = now() - options_.ttl;
  return std::erase_if(sessions_, [&](const auto& kv) { return kv.second->last_used_ < cutoff; });
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

json SessionManager::create(const std::string& source) {
  evict_expired();
  ParseResult parsed = parse(source);
  std::vector<Diagnostic> diags = parsed.diagnostics;
  if (parsed.ok()) {
    auto more = check_reversibility(*parsed.program);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  if (!parsed.ok() || has_errors(diags)) {
    json list = json::array();
    for (const auto& d : diags) {
      list.push_back({{"message", d.message}, {"span", span_to_json(d.span)},
                      {"severity", d.severity == Severity::Error ? "error" : "warning"}});
    }
    throw ProtocolError(errc::kBadProgram, "program rejected", json{{"diagnostics", list}});
  }
  std::shared_ptr<const LabeledProgram> lp;
  try {
    lp = LabeledProgram::build(*parsed.program);
  } catch (const InversionError& e) {
    throw ProtocolError(errc::kBadProgram, e.what());
  }
  auto session = std::make_shared<Session>(fresh_id(), lp);
  session->last_used_ = now();
  {
    std::lock_guard lock(mutex_);
    sessions_.emplace(session->id(), session);
  }
  json out = session->snapshot();
  out["labels"] = label_spans(*lp);
  out["cfg"] = cfg_to_json(*lp);
  return out;
}

namespace {

json outcome_json(const Session& s, const Session::Outcome& o) {
  json stop{{"reason", to_string(o.reason)}, {"steps", o.steps}};
  if (o.error) stop["error"] = *o.error;
  json out = s.snapshot();
  out["stop"] = stop;
  return out;
}

}  // namespace

json SessionManager::step(const std::string& id, Direction dir, std::uint64_t count) {
  auto s = get(id);
  std::lock_guard lock(s->mutex());
  return outcome_json(*s, s->advance(dir, count));
}

json SessionManager::continue_run(const std::string& id, Direction dir) {
  auto s = get(id);
  std::lock_guard lock(s->mutex());
  auto outcome = s->advance(dir, options_.continue_fuel);
  if (outcome.reason == StopReason::Stepped) {
    outcome.reason = StopReason::Error;
    EngineError err(ErrorKind::Timeout, "continue stopped after " +
                                            std::to_string(options_.continue_fuel) + " steps");
    err.direction = dir;
    outcome.error = error_to_json(err);
  }
  return outcome_json(*s, outcome);
}

json SessionManager::set_breakpoints(const std::string& id, const std::vector<Label>& labels) {
  auto s = get(id);
  std::lock_guard lock(s->mutex());
  std::set<Label> set;
  for (Label l : labels) {
    if (!s->program().contains(l)) {
      throw ProtocolError(errc::kUnknownLabel, "unknown label " + std::to_string(l));
    }
    set.insert(l);
  }
  s->set_breakpoints(std::move(set));
  return json{{"breakpoints", s->breakpoints()}};
}

json SessionManager::inspect(const std::string& id) {
  auto s = get(id);
  std::lock_guard lock(s->mutex());
  return s->snapshot();
}

json SessionManager::timeline(const std::string& id, std::uint64_t from, std::uint64_t to) {
  auto s = get(id);
  std::lock_guard lock(s->mutex());
  const auto& h = s->history();
  to = std::min<std::uint64_t>(to, h.size());
  json records = json::array();
  for (std::uint64_t i = from; i < to; ++i) {
    records.push_back(rev_trace_record(i, h[i].dir, h[i].rule, h[i].config));
  }
  return json{{"records", records}, {"historyLength", h.size()}};
}

json SessionManager::dispose(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (sessions_.erase(id) == 0) {
    throw ProtocolError(errc::kUnknownSession, "unknown session '" + id + "'");
  }
  return json{{"disposed", id}};
}

namespace {

const json& param(const json& params, const char* name) {
  if (!params.contains(name)) {
    throw ProtocolError(errc::kInvalidParams, std::string("missing parameter '") + name + "'");
  }
  return params.at(name);
}

std::string session_param(const json& params, const std::string& fallback) {
  if (params.contains("session")) {
    if (!params["session"].is_string()) throw ProtocolError(errc::kInvalidParams, "'session' must be a string");
    return params["session"].get<std::string>();
  }
  if (fallback.empty()) throw ProtocolError(errc::kInvalidParams, "missing parameter 'session'");
  return fallback;
}

Direction direction_param(const json& params) {
  const std::string dir = params.value("direction", std::string("fwd"));
  if (dir == "fwd" || dir == "forward") return Direction::Forward;
  if (dir == "bwd" || dir == "backward") return Direction::Backward;
  throw ProtocolError(errc::kInvalidParams, "direction must be 'fwd' or 'bwd'");
}

bool is_non_negative(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t count_param(const json& params, const char* name, std::uint64_t fallback) {
  if (!params.contains(name)) return fallback;
  const json& v = params[name];
  if (!is_non_negative(v)) {
    throw ProtocolError(errc::kInvalidParams, std::string("'") + name + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

json handle(SessionManager& m, const std::string& method, const json& params,
            const std::string& default_session) {
  if (method == "create") {
    const json& source = param(params, "source");
    if (!source.is_string()) throw ProtocolError(errc::kInvalidParams, "'source' must be a string");
    return m.create(source.get<std::string>());
  }
  const std::string id = session_param(params, default_session);
  if (method == "step") return m.step(id, direction_param(params), count_param(params, "count", 1));
  if (method == "continue") return m.continue_run(id, direction_param(params));
  if (method == "inspect") return m.inspect(id);
  if (method == "dispose") return m.dispose(id);
  if (method == "timeline") {
    return m.timeline(id, count_param(params, "from", 0),
                      count_param(params, "to", std::numeric_limits<std::uint64_t>::max()));
  }
  if (method == "setBreakpoints") {
    const json& labels = param(params, "labels");
    if (!labels.is_array()) throw ProtocolError(errc::kInvalidParams, "'labels' must be an array");
    std::vector<Label> out;
    for (const auto& l : labels) {
      if (!is_non_negative(l) || l.get<std::int64_t>() > std::numeric_limits<Label>::max()) throw ProtocolError(errc::kInvalidParams, "labels must be positive integers");
      out.push_back(l.get<Label>());
    }
    return m.set_breakpoints(id, out);
  }
  throw ProtocolError(errc::kMethodNotFound, "unknown method '" + method + "'");
}

json error_response(const json& id, int code, const std::string& message, const json& data = nullptr) {
  json err{{"code", code}, {"message", message}};
  if (!data.is_null()) err["data"] = data;
  return json{{"id", id}, {"error", err}};
}

}  // namespace

json dispatch(SessionManager& manager, const json& request, const std::string& default_session) {
  const json id = request.is_object() ? request.value("id", json()) : json();
  try {
    if (!request.is_object() || !request.contains("method") || !request["method"].is_string()) {
      throw ProtocolError(errc::kInvalidRequest, "request must be an object with a string 'method'");
    }
    const json params = request.value("params", json::object());
    if (!params.is_object()) throw ProtocolError(errc::kInvalidParams, "'params' must be an object");
    return json{{"id", id},
                {"result", handle(manager, request["method"].get<std::string>(), params, default_session)}};
  } catch (const ProtocolError& e) {
    return error_response(id, e.code(), e.what(), e.data());
  } catch (const json::exception& e) {
    return error_response(id, errc::kInvalidParams, e.what());
  }
}

std::string dispatch_text(SessionManager& manager, const std::string& text,
                          const std::string& default_session) {
  json request;
  try {
    request = json::parse(text);
  } catch (const json::parse_error& e) {
    return error_response(nullptr, errc::kParse, e.what()).dump(-1, ' ', false, json::error_handler_t::replace);
  }
  return dispatch(manager, request, default_session).dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace rjanus::debug
