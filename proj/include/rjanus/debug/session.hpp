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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rjanus/json.hpp"
#include "rjanus/reversible.hpp"

/// \file session.hpp
/// Debug sessions: a labeled program, the current reversible configuration
/// and the history of steps taken, steered forward and backward by a client.

namespace rjanus::debug {

/// Protocol-level failure, reported to the client as an error response.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(int code, const std::string& message, json data = nullptr)
      : std::runtime_error(message), code_(code), data_(std::move(data)) {}

  int code() const { return code_; }
  const json& data() const { return data_; }

 private:
  int code_;
  json data_;
};

namespace errc {
inline constexpr int kParse = -32700;
inline constexpr int kInvalidRequest = -32600;
inline constexpr int kMethodNotFound = -32601;
inline constexpr int kInvalidParams = -32602;
inline constexpr int kUnknownSession = -32000;
inline constexpr int kUnknownLabel = -32001;
inline constexpr int kBadProgram = -32002;
}  // namespace errc

enum class StopReason { Stepped, Terminal, Initial, Breakpoint, Error };

std::string_view to_string(StopReason reason);

struct HistoryEntry {
  Direction dir;
  RevRule rule;
  RevConfig config;  // after the step
};

using Clock = std::function<std::chrono::steady_clock::time_point()>;

struct SessionOptions {
  /// Idle time after which a session is dropped.
  std::chrono::seconds ttl{1800};
  /// Step budget of one `continue`.
  std::uint64_t continue_fuel = 1'000'000;
  /// Defaults to std::chrono::steady_clock::now.
  Clock clock;
};

/// Reads RJANUS_SESSION_TTL_SECS when set.
SessionOptions options_from_env();

class Session {
 public:
  Session(std::string id, std::shared_ptr<const LabeledProgram> lp);

  const std::string& id() const { return id_; }
  const LabeledProgram& program() const { return *lp_; }

  // All members below must be called with mutex() held.
  const RevConfig& current() const { return current_; }
  const std::vector<HistoryEntry>& history() const { return history_; }
  const std::set<Label>& breakpoints() const { return breakpoints_; }
  void set_breakpoints(std::set<Label> labels) { breakpoints_ = std::move(labels); }

  struct Outcome {
    std::uint64_t steps = 0;
    StopReason reason = StopReason::Stepped;
    std::optional<json> error;
  };
  /// Up to `count` steps; stops early at a boundary, a breakpoint or an error
  /// (which leaves the configuration unchanged).
  Outcome advance(Direction dir, std::uint64_t count);

  json snapshot() const;

  std::mutex& mutex() const { return mutex_; }

 private:
  std::string id_;
  std::shared_ptr<const LabeledProgram> lp_;
  RevConfig current_;
  std::vector<HistoryEntry> history_;
  std::set<Label> breakpoints_;
  mutable std::mutex mutex_;

  friend class SessionManager;
  std::chrono::steady_clock::time_point last_used_;
};

/// Owns the live sessions. Every operation is thread-safe and returns the
/// JSON result sent to the client; failures throw ProtocolError.
class SessionManager {
 public:
  explicit SessionManager(SessionOptions options = {});

  /// Parses and labels `source`; result carries the session id, the initial
  /// snapshot, the label → span map and the CFG.
  json create(const std::string& source);
  json step(const std::string& id, Direction dir, std::uint64_t count = 1);
  json continue_run(const std::string& id, Direction dir);
  json set_breakpoints(const std::string& id, const std::vector<Label>& labels);
  json inspect(const std::string& id);
  /// History records with from ≤ idx < to (clamped).
  json timeline(const std::string& id, std::uint64_t from, std::uint64_t to);
  json dispose(const std::string& id);

  /// Drops sessions idle for longer than the TTL; returns how many.
  std::size_t evict_expired();
  std::size_t size() const;

 private:
  std::shared_ptr<Session> get(const std::string& id);
  std::chrono::steady_clock::time_point now() const;
  std::string fresh_id();

  SessionOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

/// Handles one request {"id", "method", "params"} and returns
/// {"id", "result"} or {"id", "error": {"code", "message", "data"?}}.
/// Methods: create, step, continue, setBreakpoints, inspect, timeline,
/// dispose. `default_session` fills in params.session when absent.
json dispatch(SessionManager& manager, const json& request,
              const std::string& default_session = "");

/// Parses `text` as a request and dispatches it; malformed JSON yields a
/// parse-error response.
std::string dispatch_text(SessionManager& manager, const std::string& text,
                          const std::string& default_session = "");

}  // namespace rjanus::debug
