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

#ifndef SOCLENS_LLM_HTTP_BACKEND_H_
#define SOCLENS_LLM_HTTP_BACKEND_H_

#include <chrono>
#include <string>

#include "soclens/llm/chat.h"

namespace soclens::llm {

inline constexpr char kApiKeyEnv[] = "LLM_API_KEY";

struct HttpConfig {
  // Full URL of the chat-completion endpoint, e.g.
  // https://api.example.com/v1/chat/completions
  std::string endpoint;
  std::string api_key;
  std::chrono::seconds timeout{120};
};

struct EndpointUrl {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string path;
};

// Throws ValidationError for anything but http(s)://host[:port][/path].
EndpointUrl ParseEndpoint(std::string const& url);

// Posts the request JSON with a bearer token. Non-2xx statuses and connection
// failures surface as TransportError.
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(HttpConfig config);

  // Reads the key from LLM_API_KEY; throws ValidationError if it is unset.
  static HttpConfig ConfigFromEnv(std::string endpoint);

  ChatResponse Complete(ChatRequest const& request) override;

 private:
  HttpConfig config_;
  EndpointUrl url_;
};

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_HTTP_BACKEND_H_
