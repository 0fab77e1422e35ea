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

#include "soclens/llm/http_backend.h"

#include <charconv>
#include <cstdlib>

#include <httplib.h>

namespace soclens::llm {

EndpointUrl ParseEndpoint(std::string const& url) {
  EndpointUrl out;
  auto sep = url.find("://");
  if (sep == std::string::npos) {
    throw ValidationError("endpoint '" + url + "' has no scheme");
  }
  out.scheme = url.substr(0, sep);
  if (out.scheme != "http" && out.scheme != "https") {
    throw ValidationError("endpoint scheme must be http or https");
  }
  auto rest = url.substr(sep + 3);
  auto slash = rest.find('/');
  auto authority = rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);
  out.port = out.scheme == "https" ? 443 : 80;
  if (auto colon = authority.rfind(':'); colon != std::string::npos) {
    auto port = authority.substr(colon + 1);
    int value = 0;
    auto [end, ec] =
        std::from_chars(port.data(), port.data() + port.size(), value);
    if (ec != std::errc() || end != port.data() + port.size() || value <= 0 ||
        value > 65535) {
      throw ValidationError("endpoint port '" + port + "' is invalid");
    }
    out.port = value;
    authority.resize(colon);
  }
  if (authority.empty()) throw ValidationError("endpoint has no host");
  out.host = authority;
  return out;
}

HttpBackend::HttpBackend(HttpConfig config)
    : config_(std::move(config)), url_(ParseEndpoint(config_.endpoint)) {
  if (config_.api_key.empty()) {
    throw ValidationError("HTTP backend needs an API key");
  }
}

HttpConfig HttpBackend::ConfigFromEnv(std::string endpoint) {
  HttpConfig config;
  config.endpoint = std::move(endpoint);
  if (auto const* key = std::getenv(kApiKeyEnv); key != nullptr) {
    config.api_key = key;
  }
  if (config.api_key.empty()) {
    throw ValidationError(std::string(kApiKeyEnv) + " is not set");
  }
  return config;
}

ChatResponse HttpBackend::Complete(ChatRequest const& request) {
  request.Validate();
  // One client per call keeps the backend safe to share between threads.
  httplib::Client client(url_.scheme + "://" + url_.host + ":" +
                         std::to_string(url_.port));
  auto timeout = std::chrono::duration_cast<std::chrono::seconds>(
      config_.timeout);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  client.set_bearer_token_auth(config_.api_key);

  auto start = std::chrono::steady_clock::now();
  auto result = client.Post(url_.path, RequestJson(request), "application/json");
  if (!result) {
    throw TransportError("request to " + config_.endpoint +
                         " failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("endpoint returned HTTP " +
                             std::to_string(result->status),
                         result->status);
  }
  auto response = ParseCompletionResponse(result->body);
  response.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return response;
}

}  // namespace soclens::llm
