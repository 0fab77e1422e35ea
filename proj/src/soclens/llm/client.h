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

#ifndef SOCLENS_LLM_CLIENT_H_
#define SOCLENS_LLM_CLIENT_H_

#include "soclens/llm/call_log.h"
#include "soclens/llm/chat.h"

namespace soclens::llm {

// Validates the request, calls the backend and writes one call-log line for
// the invocation whether it succeeds or fails. Errors are rethrown.
ChatResponse Complete(ChatBackend& backend, ChatRequest const& request,
                      CallLog* log = nullptr);

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_CLIENT_H_
