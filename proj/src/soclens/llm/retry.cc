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

#include "soclens/llm/retry.h"

#include <thread>

namespace soclens::llm {
namespace {

// Releases an acquired semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& s) : s_(s) { s_.acquire(); }
  ~SlotGuard() { s_.release(); }
  SlotGuard(SlotGuard const&) = delete;
  SlotGuard& operator=(SlotGuard const&) = delete;

 private:
  std::counting_semaphore<>& s_;
};

}  // namespace

void RetryPolicy::Validate() const {
  if (max_attempts < 1) throw ValidationError("max_attempts must be >= 1");
  if (max_in_flight < 1) throw ValidationError("max_in_flight must be >= 1");
  if (base_backoff.count() < 0) {
    throw ValidationError("base_backoff must be >= 0");
  }
}

RetryingBackend::RetryingBackend(std::shared_ptr<ChatBackend> inner,
                                 RetryPolicy policy, Sleeper sleeper)
    : inner_(std::move(inner)),
      policy_((policy.Validate(), policy)),
      sleeper_(sleeper ? std::move(sleeper)
                       : Sleeper([](std::chrono::milliseconds d) {
                           std::this_thread::sleep_for(d);
                         })),
      slots_(policy.max_in_flight) {
  if (!inner_) throw ValidationError("retry wrapper needs a backend");
}

ChatResponse RetryingBackend::Complete(ChatRequest const& request) {
  auto backoff = policy_.base_backoff;
  for (int attempt = 1;; ++attempt) {
    try {
      ChatResponse response;
      {
        SlotGuard slot(slots_);
        response = inner_->Complete(request);
      }
      response.attempts = attempt;
      return response;
    } catch (TransportError const& e) {
      if (!e.transient()) {
        auto copy = e;
        copy.set_attempts(attempt);
        throw copy;
      }
      if (attempt >= policy_.max_attempts) {
        RetriesExhausted err("gave up after " + std::to_string(attempt) +
                                 " attempts: " + e.what(),
                             e.what(), e.status());
        err.set_attempts(attempt);
        throw err;
      }
    } catch (LlmError& e) {
      e.set_attempts(attempt);
      throw;
    }
    sleeper_(backoff);
    backoff *= 2;
  }
}

std::shared_ptr<ChatBackend> WithRetry(std::shared_ptr<ChatBackend> inner,
                                       RetryPolicy policy, Sleeper sleeper) {
  return std::make_shared<RetryingBackend>(std::move(inner), policy,
                                           std::move(sleeper));
}

}  // namespace soclens::llm
