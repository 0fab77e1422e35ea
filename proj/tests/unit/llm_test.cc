// Copyright 2026 The soclens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "soclens/common/sha256.h"
#include "soclens/llm/call_log.h"
#include "soclens/llm/client.h"
#include "soclens/llm/http_backend.h"
#include "soclens/llm/replay_backend.h"
#include "soclens/llm/retry.h"

namespace soclens::llm {
namespace {

using std::chrono::milliseconds;

ChatRequest Request(std::string text) {
  return {"gpt-4-0613", {{Role::kUser, std::move(text)}}, 0.0};
}

std::string Completion(std::string const& content) {
  return nlohmann::json{
      {"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}},
      {"usage", {{"prompt_tokens", 7}, {"completion_tokens", 3}}}}
      .dump();
}

// Plays back a fixed sequence of outcomes, counting calls.
class ScriptedBackend : public ChatBackend {
 public:
  explicit ScriptedBackend(std::vector<int> statuses)
      : statuses_(std::move(statuses)) {}
  ChatResponse Complete(ChatRequest const&) override {
    int i = calls_++;
    int status = i < static_cast<int>(statuses_.size()) ? statuses_[i] : 200;
    if (status != 200) throw TransportError("status", status);
    return {"ok", std::nullopt, milliseconds(1), 1};
  }
  int calls() const { return calls_; }

 private:
  std::vector<int> statuses_;
  std::atomic<int> calls_{0};
};

TEST(ChatTest, RequestJsonShape) {
  auto j = nlohmann::json::parse(RequestJson(Request("hello")));
  EXPECT_EQ(j["model"], "gpt-4-0613");
  EXPECT_EQ(j["temperature"], 0.0);
  ASSERT_EQ(j["messages"].size(), 1u);
  EXPECT_EQ(j["messages"][0]["role"], "user");
  EXPECT_EQ(j["messages"][0]["content"], "hello");
}

TEST(ChatTest, FingerprintIsHashOfFinalUserMessage) {
  auto req = Request("hello");
  req.messages.insert(req.messages.begin(), {Role::kSystem, "be brief"});
  EXPECT_EQ(Fingerprint(req), Sha256Hex("hello"));
  EXPECT_EQ(Fingerprint(req), Fingerprint(Request("hello")));
}

TEST(ChatTest, ValidateRejectsBadRequests) {
  EXPECT_THROW(Request("").Validate(), ValidationError);
  auto r = Request("x");
  r.temperature = -1;
  EXPECT_THROW(r.Validate(), ValidationError);
  ChatRequest only_system{"m", {{Role::kSystem, "x"}}, 0.0};
  EXPECT_THROW(only_system.Validate(), ValidationError);
}

TEST(ChatTest, ParseCompletion) {
  auto r = ParseCompletionResponse(Completion("Use case: Coding"));
  EXPECT_EQ(r.content, "Use case: Coding");
  ASSERT_TRUE(r.usage.has_value());
  EXPECT_EQ(r.usage->prompt_tokens, 7);
  EXPECT_THROW(ParseCompletionResponse("not json"), MalformedResponse);
  EXPECT_THROW(ParseCompletionResponse(R"({"choices":[]})"), MalformedResponse);
  EXPECT_THROW(ParseCompletionResponse(R"({"choices":[{"message":{}}]})"),
               MalformedResponse);
}

TEST(RetryTest, TransientFailuresThenSuccess) {
  auto inner = std::make_shared<ScriptedBackend>(std::vector<int>{503, 429});
  std::vector<milliseconds> waits;
  RetryingBackend b(inner, {3, milliseconds(100), 4},
                    [&](milliseconds d) { waits.push_back(d); });
  auto r = b.Complete(Request("x"));
  EXPECT_EQ(r.attempts, 3);
  EXPECT_EQ(inner->calls(), 3);
  EXPECT_EQ(waits, (std::vector<milliseconds>{milliseconds(100),
                                              milliseconds(200)}));
}

TEST(RetryTest, ExhaustionReportsLastError) {
  auto inner = std::make_shared<ScriptedBackend>(std::vector<int>{500, 500, 502});
  RetryingBackend b(inner, {3, milliseconds(0), 4}, [](milliseconds) {});
  try {
    b.Complete(Request("x"));
    FAIL();
  } catch (RetriesExhausted const& e) {
    EXPECT_EQ(e.attempts(), 3);
    EXPECT_EQ(e.last_status(), 502);
  }
}

TEST(RetryTest, PermanentErrorNotRetried) {
  auto inner = std::make_shared<ScriptedBackend>(std::vector<int>{401});
  RetryingBackend b(inner, {3, milliseconds(0), 4}, [](milliseconds) {});
  try {
    b.Complete(Request("x"));
    FAIL();
  } catch (TransportError const& e) {
    EXPECT_EQ(e.status(), 401);
    EXPECT_EQ(e.attempts(), 1);
  }
  EXPECT_EQ(inner->calls(), 1);
}

class SlowBackend : public ChatBackend {
 public:
  ChatResponse Complete(ChatRequest const&) override {
    int now = ++in_flight_;
    int seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(milliseconds(5));
    --in_flight_;
    return {"ok", std::nullopt, milliseconds(5), 1};
  }
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
};

TEST(RetryTest, InFlightCap) {
  auto inner = std::make_shared<SlowBackend>();
  RetryingBackend b(inner, {1, milliseconds(0), 2});
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      for (int j = 0; j < 5; ++j) b.Complete(Request("x"));
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_LE(inner->peak_.load(), 2);
  EXPECT_GE(inner->peak_.load(), 1);
}

TEST(RetryTest, PolicyValidates) {
  EXPECT_THROW((RetryPolicy{0, milliseconds(1), 1}.Validate()), ValidationError);
  EXPECT_THROW((RetryPolicy{1, milliseconds(1), 0}.Validate()), ValidationError);
}

TEST(ReplayTest, ExactMatchBeforeWildcard) {
  ReplayBackend b({{std::string(kMatchAny), "fallback"},
                   {Sha256Hex("hello"), "exact"}},
                  true);
  EXPECT_EQ(b.Complete(Request("hello")).content, "exact");
  EXPECT_EQ(b.Complete(Request("other")).content, "fallback");
  EXPECT_TRUE(b.Unconsumed().empty());
  EXPECT_NO_THROW(b.Finish());
}

TEST(ReplayTest, MissThrows) {
  ReplayBackend b({{Sha256Hex("hello"), "exact"}});
  try {
    b.Complete(Request("nope"));
    FAIL();
  } catch (ScriptMiss const& e) {
    EXPECT_EQ(e.fingerprint(), Sha256Hex("nope"));
  }
}

TEST(ReplayTest, StrictLeftover) {
  ReplayBackend lax(std::vector<ScriptEntry>{{"abc", "x"}});
  EXPECT_NO_THROW(lax.Finish());
  ReplayBackend strict({{"abc", "x"}, {"def", "y"}}, true);
  try {
    strict.Finish();
    FAIL();
  } catch (StrictModeLeftover const& e) {
    EXPECT_EQ(e.entries(), (std::vector<std::string>{"abc", "def"}));
  }
}

TEST(ReplayTest, ScriptRoundTrip) {
  std::vector<ScriptEntry> entries = {{"any", "a\nb"}, {"ff00", "quote \""}};
  EXPECT_EQ(ParseScript(SerializeScript(entries)), entries);
  EXPECT_THROW(ParseScript("{\"match\": 1}"), ValidationError);
}

TEST(HttpTest, ParseEndpoint) {
  auto u = ParseEndpoint("https://api.example.com/v1/chat/completions");
  EXPECT_EQ(u.scheme, "https");
  EXPECT_EQ(u.host, "api.example.com");
  EXPECT_EQ(u.port, 443);
  EXPECT_EQ(u.path, "/v1/chat/completions");
  EXPECT_EQ(ParseEndpoint("http://localhost:8080/x").port, 8080);
  EXPECT_THROW(ParseEndpoint("ftp://x/y"), ValidationError);
}

TEST(HttpTest, RequiresKey) {
  EXPECT_THROW(HttpBackend({"http://127.0.0.1:1/x", "", std::chrono::seconds(1)}),
               ValidationError);
}

class LocalServer {
 public:
  LocalServer() {
    server_.Post("/ok", [](httplib::Request const& req, httplib::Response& res) {
      auto j = nlohmann::json::parse(req.body);
      bool authed = req.get_header_value("Authorization") == "Bearer k";
      res.set_content(Completion(authed ? "echo " + j["messages"][0]["content"]
                                                        .get<std::string>()
                                        : "no auth"),
                      "application/json");
    });
    server_.Post("/fail", [](httplib::Request const&, httplib::Response& res) {
      res.status = 500;
    });
    server_.Post("/empty", [](httplib::Request const&, httplib::Response& res) {
      res.set_content(R"({"choices":[{"message":{"role":"assistant"}}]})",
                      "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url(std::string const& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpTest, LocalServerRoundTrip) {
  LocalServer server;
  HttpBackend ok({server.Url("/ok"), "k", std::chrono::seconds(5)});
  EXPECT_EQ(ok.Complete(Request("hi")).content, "echo hi");

  HttpBackend fail({server.Url("/fail"), "k", std::chrono::seconds(5)});
  try {
    fail.Complete(Request("hi"));
    FAIL();
  } catch (TransportError const& e) {
    EXPECT_EQ(e.status(), 500);
    EXPECT_TRUE(e.transient());
  }

  HttpBackend empty({server.Url("/empty"), "k", std::chrono::seconds(5)});
  EXPECT_THROW(empty.Complete(Request("hi")), MalformedResponse);

  HttpBackend down({"http://127.0.0.1:1/x", "k", std::chrono::seconds(1)});
  try {
    down.Complete(Request("hi"));
    FAIL();
  } catch (TransportError const& e) {
    EXPECT_EQ(e.status(), 0);
  }
}

TEST(ClientTest, LogsOneLinePerCall) {
  CallLog log;
  ReplayBackend b({{Sha256Hex("a"), "x"}});
  EXPECT_EQ(Complete(b, Request("a"), &log).content, "x");
  EXPECT_THROW(Complete(b, Request("b"), &log), ScriptMiss);
  auto lines = log.Lines();
  ASSERT_EQ(lines.size(), 2u);
  auto first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["outcome"], "ok");
  EXPECT_EQ(first["request_fingerprint"], Sha256Hex("a"));
  EXPECT_EQ(first["attempt"], 1);
  EXPECT_EQ(first["model"], "gpt-4-0613");
  EXPECT_EQ(nlohmann::json::parse(lines[1])["outcome"], "script_miss");
}

TEST(ClientTest, RetriesReflectedInLog) {
  CallLog log;
  auto inner = std::make_shared<ScriptedBackend>(std::vector<int>{503});
  auto b = WithRetry(inner, {3, milliseconds(0), 1}, [](milliseconds) {});
  Complete(*b, Request("a"), &log);
  EXPECT_EQ(nlohmann::json::parse(log.Lines()[0])["attempt"], 2);
}

TEST(ClientTest, FileLogAppends) {
  auto path = std::filesystem::temp_directory_path() / "soclens_calls.jsonl";
  std::filesystem::remove(path);
  {
    CallLog log(path);
    ReplayBackend b(std::vector<ScriptEntry>{{"any", "x"}});
    Complete(b, Request("a"), &log);
    Complete(b, Request("b"), &log);
  }
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace soclens::llm
