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

#include "soclens/llm/client.h"

#include <chrono>

namespace soclens::llm {

ChatResponse Complete(ChatBackend& backend, ChatRequest const& request,
                      CallLog* log) {
  request.Validate();
  auto fp = Fingerprint(request);
  auto start = std::chrono::steady_clock::now();
  auto record = [&](int attempt, std::string outcome) {
    if (log == nullptr) return;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    log->Append({std::chrono::floor<std::chrono::seconds>(
                     std::chrono::system_clock::now()),
                 fp, request.model, attempt, std::move(outcome),
                 elapsed.count()});
  };
  try {
    auto response = backend.Complete(request);
    if (response.latency.count() == 0) {
      response.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
    }
    record(response.attempts, "ok");
    return response;
  } catch (LlmError const& e) {
    record(e.attempts(), OutcomeName(e));
    throw;
  } catch (std::exception const& e) {
    record(1, OutcomeName(e));
    throw;
  }
}

}  // namespace soclens::llm
