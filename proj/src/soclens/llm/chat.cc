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

#include "soclens/llm/chat.h"

#include <cmath>

#include <nlohmann/json.hpp>
#include "soclens/common/sha256.h"

namespace soclens::llm {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kSystem:
      return "system";
    case Role::kUser:
      return "user";
    case Role::kAssistant:
      return "assistant";
  }
  return "user";
}

void ChatRequest::Validate() const {
  bool has_user = false;
  for (auto const& m : messages) {
    if (m.content.empty()) throw ValidationError("chat message is empty");
    has_user = has_user || m.role == Role::kUser;
  }
  if (!has_user) throw ValidationError("chat request has no user message");
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw ValidationError("temperature must be finite and >= 0");
  }
}

std::string const& ChatRequest::FinalUserMessage() const {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == Role::kUser) return it->content;
  }
  throw ValidationError("chat request has no user message");
}

std::string Fingerprint(ChatRequest const& request) {
  return Sha256Hex(request.FinalUserMessage());
}

std::string RequestJson(ChatRequest const& request) {
  nlohmann::ordered_json body;
  body["model"] = request.model;
  body["messages"] = nlohmann::ordered_json::array();
  for (auto const& m : request.messages) {
    body["messages"].push_back(
        {{"role", std::string(RoleName(m.role))}, {"content", m.content}});
  }
  body["temperature"] = request.temperature;
  return body.dump();
}

ChatResponse ParseCompletionResponse(std::string_view body) {
  auto json = nlohmann::json::parse(body, nullptr, false);
  if (json.is_discarded()) {
    throw MalformedResponse("completion response is not valid JSON");
  }
  auto const* content = [&]() -> nlohmann::json const* {
    if (!json.is_object() || !json.contains("choices")) return nullptr;
    auto const& choices = json["choices"];
    if (!choices.is_array() || choices.empty()) return nullptr;
    auto const& first = choices[0];
    if (!first.is_object() || !first.contains("message")) return nullptr;
    auto const& message = first["message"];
    if (!message.is_object() || !message.contains("content")) return nullptr;
    return &message["content"];
  }();
  if (content == nullptr || !content->is_string()) {
    throw MalformedResponse(
        "completion response lacks choices[0].message.content");
  }
  ChatResponse out;
  out.content = content->get<std::string>();
  if (auto it = json.find("usage"); it != json.end() && it->is_object()) {
    Usage u;
    u.prompt_tokens = it->value("prompt_tokens", std::int64_t{0});
    u.completion_tokens = it->value("completion_tokens", std::int64_t{0});
    out.usage = u;
  }
  return out;
}

std::string OutcomeName(std::exception const& e) {
  if (dynamic_cast<RetriesExhausted const*>(&e)) return "retries_exhausted";
  if (dynamic_cast<TransportError const*>(&e)) return "transport_error";
  if (dynamic_cast<MalformedResponse const*>(&e)) return "malformed_response";
  if (dynamic_cast<ScriptMiss const*>(&e)) return "script_miss";
  if (dynamic_cast<ValidationError const*>(&e)) return "invalid_request";
  return "error";
}

}  // namespace soclens::llm
