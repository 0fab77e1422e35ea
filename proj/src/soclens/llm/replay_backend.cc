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

#include "soclens/llm/replay_backend.h"

#include <nlohmann/json.hpp>
#include "soclens/common/io.h"
#include "soclens/common/text.h"

namespace soclens::llm {

std::vector<ScriptEntry> ParseScript(std::string_view text) {
  std::vector<ScriptEntry> out;
  std::size_t line_no = 0;
  for (auto line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto where = "replay script line " + std::to_string(line_no);
    auto json = nlohmann::json::parse(line, nullptr, false);
    if (json.is_discarded() || !json.is_object()) {
      throw ValidationError(where + ": not a JSON object");
    }
    auto match = json.find("match");
    auto content = json.find("content");
    if (match == json.end() || !match->is_string() || content == json.end() ||
        !content->is_string()) {
      throw ValidationError(where + ": needs string 'match' and 'content'");
    }
    out.push_back({match->get<std::string>(), content->get<std::string>()});
  }
  return out;
}

std::string SerializeScript(std::vector<ScriptEntry> const& entries) {
  std::string out;
  for (auto const& e : entries) {
    nlohmann::ordered_json j;
    j["match"] = e.match;
    j["content"] = e.content;
    out += j.dump();
    out += '\n';
  }
  return out;
}

ReplayBackend::ReplayBackend(std::vector<ScriptEntry> entries, bool strict)
    : entries_(std::move(entries)),
      strict_(strict),
      consumed_(entries_.size(), false) {}

std::shared_ptr<ReplayBackend> ReplayBackend::Load(
    std::filesystem::path const& path, bool strict) {
  return std::make_shared<ReplayBackend>(ParseScript(ReadFile(path)), strict);
}

ChatResponse ReplayBackend::Complete(ChatRequest const& request) {
  request.Validate();
  auto fp = Fingerprint(request);
  auto pick = entries_.size();
  for (std::size_t i = 0; i < entries_.size() && pick == entries_.size(); ++i) {
    if (entries_[i].match == fp) pick = i;
  }
  for (std::size_t i = 0; i < entries_.size() && pick == entries_.size(); ++i) {
    if (entries_[i].match == kMatchAny) pick = i;
  }
  if (pick == entries_.size()) throw ScriptMiss(fp);
  {
    std::lock_guard lock(mu_);
    consumed_[pick] = true;
  }
  ChatResponse out;
  out.content = entries_[pick].content;
  return out;
}

std::vector<std::string> ReplayBackend::Unconsumed() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!consumed_[i]) out.push_back(entries_[i].match);
  }
  return out;
}

void ReplayBackend::Finish() const {
  if (!strict_) return;
  auto left = Unconsumed();
  if (left.empty()) return;
  std::string what = std::to_string(left.size()) +
                     " replay script entries never used: " + Join(left, ", ");
  throw StrictModeLeftover(what, std::move(left));
}

}  // namespace soclens::llm
