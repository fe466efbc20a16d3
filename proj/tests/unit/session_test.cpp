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

#include <gtest/gtest.h>

#include <cstdlib>

#include "rjanus/debug/session.hpp"
#include "support.hpp"

namespace rjanus::debug {
namespace {

const std::string& sum3() { return testing::corpus_entry("sum3").source; }

json call(SessionManager& m, const std::string& method, json params = json::object()) {
  return dispatch(m, json{{"id", 1}, {"method", method}, {"params", std::move(params)}});
}

int error_code(const json& response) { return response.at("error").at("code").get<int>(); }

TEST(Session, CreateReturnsTheInitialConfiguration) {
  SessionManager m;
  const json r = m.create(sum3());
  EXPECT_EQ(r["config"]["prev"], 1);
  EXPECT_EQ(r["config"]["next"], 2);
  EXPECT_EQ(r["initial"], true);
  EXPECT_EQ(r["terminal"], false);
  EXPECT_EQ(r["labels"].size(), 26u);
  EXPECT_EQ(r["cfg"]["units"].size(), 3u);
  EXPECT_EQ(m.size(), 1u);
}

TEST(Session, BreakpointStopsTheForwardRun) {
  SessionManager m;
  const std::string id = m.create(sum3())["session"];
  m.set_breakpoints(id, {13});
  const json r = m.continue_run(id, Direction::Forward);
  EXPECT_EQ(r["stop"]["reason"], "breakpoint");
  EXPECT_EQ(r["stop"]["steps"], 7);
  EXPECT_EQ(r["config"]["next"], 13);
  EXPECT_EQ(r["historyLength"], 7);
}

TEST(Session, ContinueRunsToEitherEnd) {
  SessionManager m;
  const std::string id = m.create(sum3())["session"];
  json r = m.continue_run(id, Direction::Forward);
  EXPECT_EQ(r["stop"]["reason"], "terminal");
  EXPECT_EQ(r["stop"]["steps"], 22);
  EXPECT_EQ(r["config"]["store"]["scalars"], json::parse(R"({"i":3,"n":6,"total":3})"));
  r = m.continue_run(id, Direction::Backward);
  EXPECT_EQ(r["stop"]["reason"], "initial");
  EXPECT_EQ(r["stop"]["steps"], 22);
  EXPECT_EQ(r["config"]["store"]["scalars"], json::object());
  EXPECT_EQ(r["initial"], true);
}

TEST(Session, BackwardBreakpointsMatchThePreviousLabel) {
  SessionManager m;
  const std::string id = m.create(sum3())["session"];
  m.continue_run(id, Direction::Forward);
  m.set_breakpoints(id, {9});
  const json r = m.continue_run(id, Direction::Backward);
  EXPECT_EQ(r["stop"]["reason"], "breakpoint");
  EXPECT_EQ(r["config"]["prev"], 9);
}

TEST(Session, SteppingAtTheBoundaries) {
  SessionManager m;
  const std::string id = m.create("x += 1")["session"];
  json r = m.step(id, Direction::Backward);
  EXPECT_EQ(r["stop"]["reason"], "initial");
  EXPECT_EQ(r["stop"]["steps"], 0);
  r = m.step(id, Direction::Forward, 5);
  EXPECT_EQ(r["stop"]["reason"], "terminal");
  EXPECT_EQ(r["stop"]["steps"], 1);
}

TEST(Session, FailedStepLeavesTheConfigurationUnchanged) {
  SessionManager m;
  const std::string id = m.create("x += 1 if x = 0 then skip else skip fi x = 1")["session"];
  json r = m.step(id, Direction::Forward, 10);
  EXPECT_EQ(r["stop"]["reason"], "error");
  EXPECT_EQ(r["stop"]["error"]["kind"], "AssertionViolation");
  EXPECT_EQ(r["stop"]["error"]["direction"], "fwd");
  const json before = r["config"];
  r = m.step(id, Direction::Forward);
  EXPECT_EQ(r["config"], before);
}

TEST(Session, ContinueIsBounded) {
  SessionOptions options;
  options.continue_fuel = 1000;
  SessionManager m(options);
  const std::string id = m.create("from c = 0 do c += 1 loop skip until c = 0")["session"];
  const json r = m.continue_run(id, Direction::Forward);
  EXPECT_EQ(r["stop"]["reason"], "error");
  EXPECT_EQ(r["stop"]["error"]["kind"], "Timeout");
  EXPECT_EQ(r["stop"]["steps"], 1000);
}

TEST(Session, TimelineSlices) {
  SessionManager m;
  const std::string id = m.create(sum3())["session"];
  m.continue_run(id, Direction::Forward);
  json t = m.timeline(id, 0, 1000);
  ASSERT_EQ(t["records"].size(), 22u);
  EXPECT_EQ(t["records"][1]["rule"], "Call");
  EXPECT_EQ(t["records"][21]["rule"], "Return1");
  t = m.timeline(id, 5, 8);
  ASSERT_EQ(t["records"].size(), 3u);
  EXPECT_EQ(t["records"][0]["idx"], 5);
  m.step(id, Direction::Backward, 2);
  t = m.timeline(id, 22, 100);
  ASSERT_EQ(t["records"].size(), 2u);
  EXPECT_EQ(t["records"][0]["dir"], "bwd");
  EXPECT_EQ(t["historyLength"], 24);
}

TEST(Session, RejectsBadPrograms) {
  SessionManager m;
  try {
    m.create("x += x");
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.code(), errc::kBadProgram);
    EXPECT_EQ(e.data()["diagnostics"].size(), 1u);
  }
  EXPECT_THROW(m.create("x += (1"), ProtocolError);
  EXPECT_EQ(m.size(), 0u);
}

TEST(Session, UnknownSessionsAndLabels) {
  SessionManager m;
  const std::string id = m.create("skip")["session"];
  try {
    m.set_breakpoints(id, {99});
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.code(), errc::kUnknownLabel);
  }
  try {
    m.inspect("nope");
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.code(), errc::kUnknownSession);
  }
  m.dispose(id);
  EXPECT_THROW(m.inspect(id), ProtocolError);
  EXPECT_THROW(m.dispose(id), ProtocolError);
}

TEST(Session, IdleSessionsExpire) {
  auto t = std::chrono::steady_clock::time_point{};
  SessionOptions options;
  options.ttl = std::chrono::seconds(60);
  options.clock = [&] { return t; };
  SessionManager m(options);
  const std::string a = m.create("skip")["session"];
  t += std::chrono::seconds(40);
  const std::string b = m.create("skip")["session"];
  t += std::chrono::seconds(30);
  EXPECT_EQ(m.evict_expired(), 1u);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_THROW(m.inspect(a), ProtocolError);
  EXPECT_NO_THROW(m.inspect(b));  // touching b renews it
  t += std::chrono::seconds(59);
  EXPECT_NO_THROW(m.inspect(b));
}

TEST(Session, TtlFromEnvironment) {
  ::setenv("RJANUS_SESSION_TTL_SECS", "5", 1);
  EXPECT_EQ(options_from_env().ttl, std::chrono::seconds(5));
  ::unsetenv("RJANUS_SESSION_TTL_SECS");
  EXPECT_EQ(options_from_env().ttl, std::chrono::seconds(1800));
}

TEST(Dispatch, MethodsAndErrors) {
  SessionManager m;
  const json created = call(m, "create", {{"source", sum3()}});
  ASSERT_TRUE(created.contains("result")) << created.dump();
  EXPECT_EQ(created["id"], 1);
  const std::string id = created["result"]["session"];

  json r = call(m, "step", {{"session", id}, {"direction", "fwd"}, {"count", 3}});
  EXPECT_EQ(r["result"]["stop"]["steps"], 3) << r.dump();
  r = call(m, "setBreakpoints", {{"session", id}, {"labels", {13}}});
  EXPECT_EQ(r["result"]["breakpoints"], json::parse("[13]"));
  r = call(m, "continue", {{"session", id}, {"direction", "fwd"}});
  EXPECT_EQ(r["result"]["config"]["next"], 13);
  r = call(m, "inspect", {{"session", id}});
  EXPECT_EQ(r["result"]["historyLength"], 7);
  r = call(m, "timeline", {{"session", id}, {"from", 0}, {"to", 2}});
  EXPECT_EQ(r["result"]["records"].size(), 2u);

  EXPECT_EQ(error_code(call(m, "fly", {{"session", id}})), errc::kMethodNotFound);
  EXPECT_EQ(error_code(call(m, "step", {{"session", id}, {"direction", "up"}})), errc::kInvalidParams);
  EXPECT_EQ(error_code(call(m, "step", {{"session", id}, {"count", -1}})), errc::kInvalidParams);
  EXPECT_EQ(error_code(call(m, "step")), errc::kInvalidParams);
  EXPECT_EQ(error_code(call(m, "inspect", {{"session", "zzz"}})), errc::kUnknownSession);
  EXPECT_EQ(error_code(call(m, "create", {{"source", "x += x"}})), errc::kBadProgram);
  EXPECT_EQ(error_code(dispatch(m, json::parse("[1]"))), errc::kInvalidRequest);

  r = call(m, "dispose", {{"session", id}});
  EXPECT_EQ(r["result"]["disposed"], id);
}

TEST(Dispatch, DefaultSessionAndRawText) {
  SessionManager m;
  const std::string id = m.create("x += 1")["session"];
  const json r = json::parse(dispatch_text(m, R"({"id":"a","method":"step"})", id));
  EXPECT_EQ(r["id"], "a");
  EXPECT_EQ(r["result"]["terminal"], true);
  const json bad = json::parse(dispatch_text(m, "{not json", id));
  EXPECT_EQ(bad["error"]["code"], errc::kParse);
  EXPECT_TRUE(bad["id"].is_null());
}

}  // namespace
}  // namespace rjanus::debug
