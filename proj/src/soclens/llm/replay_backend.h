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

#ifndef SOCLENS_LLM_REPLAY_BACKEND_H_
#define SOCLENS_LLM_REPLAY_BACKEND_H_

#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/llm/chat.h"

namespace soclens::llm {

inline constexpr std::string_view kMatchAny = "any";

struct ScriptEntry {
  std::string match;  // request fingerprint or "any"
  std::string content;

  friend bool operator==(ScriptEntry const&, ScriptEntry const&) = default;
};

// JSONL of {"match": ..., "content": ...}. Throws ValidationError naming the
// offending line.
std::vector<ScriptEntry> ParseScript(std::string_view text);
std::string SerializeScript(std::vector<ScriptEntry> const& entries);

// Serves scripted replies. A request gets the first entry whose match equals
// its fingerprint, else the first "any" entry, else ScriptMiss. The reply
// depends only on the script and the request, never on call order.
class ReplayBackend : public ChatBackend {
 public:
  explicit ReplayBackend(std::vector<ScriptEntry> entries, bool strict = false);
  static std::shared_ptr<ReplayBackend> Load(std::filesystem::path const& path,
                                             bool strict = false);

  ChatResponse Complete(ChatRequest const& request) override;

  // Match keys of entries never served, in script order.
  std::vector<std::string> Unconsumed() const;
  // In strict mode throws StrictModeLeftover if any entry was never served.
  void Finish() const;

 private:
  std::vector<ScriptEntry> entries_;
  bool strict_;
  mutable std::mutex mu_;
  std::vector<bool> consumed_;
};

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_REPLAY_BACKEND_H_
