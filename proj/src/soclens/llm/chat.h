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

#ifndef SOCLENS_LLM_CHAT_H_
#define SOCLENS_LLM_CHAT_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/common/error.h"

namespace soclens::llm {

enum class Role { kSystem, kUser, kAssistant };

std::string_view RoleName(Role role);

struct Message {
  Role role = Role::kUser;
  std::string content;

  friend bool operator==(Message const&, Message const&) = default;
};

struct ChatRequest {
  std::string model;
  std::vector<Message> messages;
  double temperature = 0.0;

  // Throws ValidationError unless there is a user message, every content is
  // non-empty and temperature is a finite value >= 0.
  void Validate() const;
  // Content of the last user message. Requires Validate() to pass.
  std::string const& FinalUserMessage() const;
};

struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
};

struct ChatResponse {
  std::string content;
  std::optional<Usage> usage;
  std::chrono::milliseconds latency{0};
  int attempts = 1;
};

// SHA-256 hex digest of the final user message.
std::string Fingerprint(ChatRequest const& request);

// {"model":...,"messages":[{"role":...,"content":...}],"temperature":...}
std::string RequestJson(ChatRequest const& request);

// Reads choices[0].message.content and the optional usage block. Throws
// MalformedResponse when the body is not JSON or the content is missing.
ChatResponse ParseCompletionResponse(std::string_view body);

// Base of every backend failure. `attempts` is filled in by the retry layer.
class LlmError : public Error {
 public:
  using Error::Error;
  int attempts() const { return attempts_; }
  void set_attempts(int n) { attempts_ = n; }

 private:
  int attempts_ = 1;
};

// Connection failure (status 0) or a non-success HTTP status.
class TransportError : public LlmError {
 public:
  explicit TransportError(std::string const& what, int status = 0)
      : LlmError(what), status_(status) {}
  int status() const { return status_; }
  // 429, 5xx and connection failures are worth retrying.
  bool transient() const {
    return status_ == 0 || status_ == 429 || status_ >= 500;
  }

 private:
  int status_;
};

class MalformedResponse : public LlmError {
 public:
  using LlmError::LlmError;
};

class RetriesExhausted : public LlmError {
 public:
  RetriesExhausted(std::string const& what, std::string last_error,
                   int last_status)
      : LlmError(what),
        last_error_(std::move(last_error)),
        last_status_(last_status) {}
  std::string const& last_error() const { return last_error_; }
  int last_status() const { return last_status_; }

 private:
  std::string last_error_;
  int last_status_;
};

class ScriptMiss : public LlmError {
 public:
  explicit ScriptMiss(std::string fingerprint)
      : LlmError("no replay script entry for request " + fingerprint),
        fingerprint_(std::move(fingerprint)) {}
  std::string const& fingerprint() const { return fingerprint_; }

 private:
  std::string fingerprint_;
};

class StrictModeLeftover : public LlmError {
 public:
  StrictModeLeftover(std::string const& what, std::vector<std::string> entries)
      : LlmError(what), entries_(std::move(entries)) {}
  // `match` keys of the entries never served.
  std::vector<std::string> const& entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;
};

// Short snake_case name used as the call-log outcome of a failure.
std::string OutcomeName(std::exception const& e);

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  // Must be safe to call from several threads at once.
  virtual ChatResponse Complete(ChatRequest const& request) = 0;
};

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_CHAT_H_
