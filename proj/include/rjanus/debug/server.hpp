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
#include <memory>
#include <string>

#include "rjanus/debug/session.hpp"

namespace rjanus::debug {

inline constexpr std::uint16_t kDefaultPort = 7420;

/// HTTP + WebSocket front end of a SessionManager.
///
///   POST   /sessions                 {"source": text} → create result
///   GET    /sessions/{id}/state      → inspect result
///   DELETE /sessions/{id}            → dispose result
///   GET    /sessions/{id}/channel    WebSocket; one request message, one
///                                    response message (see dispatch)
///   POST   /rpc                      one request, one response over HTTP
class Server {
 public:
  explicit Server(SessionManager& manager, std::size_t threads = 2);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and starts serving in background threads. Port 0 picks a free
  /// port; the bound port is returned. Throws std::system_error.
  std::uint16_t start(const std::string& address, std::uint16_t port);
  /// Blocks until stop() is called from another thread.
  void wait();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rjanus::debug
