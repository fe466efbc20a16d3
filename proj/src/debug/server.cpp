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

#include "rjanus/debug/server.hpp"

#include <condition_variable>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace rjanus::debug {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace {

constexpr std::size_t kBodyLimit = 4 * 1024 * 1024;

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

std::vector<std::string_view> split_path(std::string_view target) {
  if (auto q = target.find('?'); q != std::string_view::npos) target = target.substr(0, q);
  std::vector<std::string_view> parts;
  while (!target.empty()) {
    if (target.front() == '/') {
      target.remove_prefix(1);
      continue;
    }
    const auto slash = target.find('/');
    parts.push_back(target.substr(0, slash));
    if (slash == std::string_view::npos) break;
    target.remove_prefix(slash);
  }
  return parts;
}

http::status status_for(int code) {
  switch (code) {
    case errc::kUnknownSession: return http::status::not_found;
    case errc::kMethodNotFound: return http::status::not_found;
    default: return http::status::bad_request;
  }
}

json error_body(const ProtocolError& e) {
  json err{{"code", e.code()}, {"message", e.what()}};
  if (!e.data().is_null()) err["data"] = e.data();
  return json{{"error", err}};
}

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket&& socket, SessionManager& manager, std::string session)
      : ws_(std::move(socket)), manager_(manager), session_(std::move(session)) {}

  void run(http::request<http::string_body> req) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.read_message_max(kBodyLimit);
    ws_.async_accept(req, beast::bind_front_handler(&WsSession::on_accept, shared_from_this()));
  }

 private:
  void on_accept(beast::error_code ec) {
    if (!ec) do_read();
  }

  void do_read() {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::on_read, shared_from_this()));
  }

  void on_read(beast::error_code ec, std::size_t) {
    if (ec) return;  // closed or failed
    reply_ = dispatch_text(manager_, beast::buffers_to_string(buffer_.data()), session_);
    buffer_.consume(buffer_.size());
    ws_.text(true);
    ws_.async_write(net::buffer(reply_),
                    beast::bind_front_handler(&WsSession::on_write, shared_from_this()));
  }

  void on_write(beast::error_code ec, std::size_t) {
    if (!ec) do_read();
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::string reply_;
  SessionManager& manager_;
  std::string session_;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, SessionManager& manager)
      : stream_(std::move(socket)), manager_(manager) {}

  void run() { do_read(); }

 private:
  void do_read() {
    parser_.emplace();
    parser_->body_limit(kBodyLimit);
    stream_.expires_after(std::chrono::seconds(60));
    http::async_read(stream_, buffer_, *parser_,
                     beast::bind_front_handler(&HttpSession::on_read, shared_from_this()));
  }

  void on_read(beast::error_code ec, std::size_t) {
    if (ec) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    http::request<http::string_body> req = parser_->release();
    if (websocket::is_upgrade(req)) {
      upgrade(std::move(req));
      return;
    }
    respond(handle(req));
  }

  void upgrade(http::request<http::string_body> req) {
    const auto parts = split_path(std::string_view(req.target().data(), req.target().size()));
    if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "channel") {
      const std::string id(parts[1]);
      try {
        manager_.inspect(id);
      } catch (const ProtocolError& e) {
        respond(make_response(req, status_for(e.code()), error_body(e)));
        return;
      }
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), manager_, id)->run(std::move(req));
      return;
    }
    respond(make_response(req, http::status::not_found,
                          json{{"error", {{"code", 404}, {"message", "no such channel"}}}}));
  }

  http::response<http::string_body> make_response(const http::request<http::string_body>& req,
                                                  http::status status, const json& body) {
    http::response<http::string_body> res{status, req.version()};
    res.set(http::field::server, "rjanus");
    res.set(http::field::content_type, "application/json");
    res.set(http::field::access_control_allow_origin, "*");
    res.set(http::field::access_control_allow_methods, "GET, POST, DELETE, OPTIONS");
    res.set(http::field::access_control_allow_headers, "Content-Type");
    res.keep_alive(req.keep_alive());
    if (!body.is_null()) res.body() = dump(body);
    res.prepare_payload();
    return res;
  }

  http::response<http::string_body> handle(const http::request<http::string_body>& req) {
    const auto parts = split_path(std::string_view(req.target().data(), req.target().size()));
    const auto method = req.method();
    try {
      if (method == http::verb::options) {
        return make_response(req, http::status::no_content, nullptr);
      }
      if (parts.size() == 1 && parts[0] == "health" && method == http::verb::get) {
        return make_response(req, http::status::ok, json{{"ok", true}});
      }
      if (parts.size() == 1 && parts[0] == "rpc" && method == http::verb::post) {
        http::response<http::string_body> res = make_response(req, http::status::ok, nullptr);
        res.body() = dispatch_text(manager_, req.body());
        res.prepare_payload();
        return res;
      }
      if (parts.size() == 1 && parts[0] == "sessions" && method == http::verb::post) {
        json body;
        try {
          body = json::parse(req.body());
        } catch (const json::parse_error& e) {
          throw ProtocolError(errc::kParse, e.what());
        }
        if (!body.is_object() || !body.contains("source") || !body["source"].is_string()) {
          throw ProtocolError(errc::kInvalidParams, "body must be {\"source\": string}");
        }
        return make_response(req, http::status::created, manager_.create(body["source"].get<std::string>()));
      }
      if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "state" &&
          method == http::verb::get) {
        return make_response(req, http::status::ok, manager_.inspect(std::string(parts[1])));
      }
      if (parts.size() == 2 && parts[0] == "sessions" && method == http::verb::delete_) {
        return make_response(req, http::status::ok, manager_.dispose(std::string(parts[1])));
      }
      return make_response(req, http::status::not_found,
                           json{{"error", {{"code", 404}, {"message", "not found"}}}});
    } catch (const ProtocolError& e) {
      return make_response(req, status_for(e.code()), error_body(e));
    }
  }

  void respond(http::response<http::string_body> res) {
    auto owned = std::make_shared<http::response<http::string_body>>(std::move(res));
    http::async_write(stream_, *owned,
                      [self = shared_from_this(), owned](beast::error_code ec, std::size_t) {
                        self->on_write(owned->keep_alive(), ec);
                      });
  }

  void on_write(bool keep_alive, beast::error_code ec) {
    if (ec) return;
    if (!keep_alive) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    do_read();
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  std::optional<http::request_parser<http::string_body>> parser_;
  SessionManager& manager_;
};

}  // namespace

struct Server::Impl {
  explicit Impl(SessionManager& m, std::size_t n) : manager(m), threads_wanted(n ? n : 1) {}

  void do_accept() {
    acceptor->async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) {
        if (ec == net::error::operation_aborted) return;
      } else {
        std::make_shared<HttpSession>(std::move(socket), manager)->run();
      }
      do_accept();
    });
  }

  SessionManager& manager;
  std::size_t threads_wanted;
  net::io_context ioc;
  std::optional<tcp::acceptor> acceptor;
  std::vector<std::thread> threads;
  std::mutex mutex;
  std::condition_variable stopped_cv;
  bool stopped = false;
};

Server::Server(SessionManager& manager, std::size_t threads)
    : impl_(std::make_unique<Impl>(manager, threads)) {}

Server::~Server() { stop(); }

std::uint16_t Server::start(const std::string& address, std::uint16_t port) {
  const tcp::endpoint endpoint{net::ip::make_address(address), port};
  impl_->acceptor.emplace(impl_->ioc);
  impl_->acceptor->open(endpoint.protocol());
  impl_->acceptor->set_option(net::socket_base::reuse_address(true));
  impl_->acceptor->bind(endpoint);
  impl_->acceptor->listen(net::socket_base::max_listen_connections);
  const std::uint16_t bound = impl_->acceptor->local_endpoint().port();
  impl_->do_accept();
  for (std::size_t i = 0; i < impl_->threads_wanted; ++i) {
    impl_->threads.emplace_back([this] { impl_->ioc.run(); });
  }
  return bound;
}

void Server::wait() {
  std::unique_lock lock(impl_->mutex);
  impl_->stopped_cv.wait(lock, [this] { return impl_->stopped; });
}

void Server::stop() {
  {
    std::lock_guard lock(impl_->mutex);
    if (impl_->stopped) return;
    impl_->stopped = true;
  }
  impl_->ioc.stop();
  for (auto& t : impl_->threads) {
    if (t.joinable()) t.join();
  }
  impl_->threads.clear();
  impl_->stopped_cv.notify_all();
}

}  // namespace rjanus::debug
