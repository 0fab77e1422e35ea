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

#ifndef SOCLENS_LLM_RETRY_H_
#define SOCLENS_LLM_RETRY_H_

#include <chrono>
#include <functional>
#include <memory>
#include <semaphore>

#include "soclens/llm/chat.h"

namespace soclens::llm {

struct RetryPolicy {
  int max_attempts = 3;
  // Wait before retry r (1-based) is base_backoff * 2^(r-1).
  std::chrono::milliseconds base_backoff{1000};
  int max_in_flight = 4;

  // Throws ValidationError on non-positive attempts or in-flight cap.
  void Validate() const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Retries transient failures (connection errors, 429, 5xx) with exponential
// backoff and caps concurrent calls into the wrapped backend. Other errors
// propagate after the first attempt.
class RetryingBackend : public ChatBackend {
 public:
  // A null `sleeper` means std::this_thread::sleep_for.
  RetryingBackend(std::shared_ptr<ChatBackend> inner, RetryPolicy policy,
                  Sleeper sleeper = nullptr);

  ChatResponse Complete(ChatRequest const& request) override;

 private:
  std::shared_ptr<ChatBackend> inner_;
  RetryPolicy policy_;
  Sleeper sleeper_;
  std::counting_semaphore<> slots_;
};

std::shared_ptr<ChatBackend> WithRetry(std::shared_ptr<ChatBackend> inner,
                                       RetryPolicy policy,
                                       Sleeper sleeper = nullptr);

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_RETRY_H_
