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

#include "soclens/llm/call_log.h"

#include <nlohmann/json.hpp>
#include "soclens/common/error.h"

namespace soclens::llm {

std::string CallRecordJson(CallRecord const& record) {
  nlohmann::ordered_json j;
  j["ts"] = corpus::FormatRfc3339(record.ts);
  j["request_fingerprint"] = record.request_fingerprint;
  j["model"] = record.model;
  j["attempt"] = record.attempt;
  j["outcome"] = record.outcome;
  j["latency_ms"] = record.latency_ms;
  return j.dump();
}

CallLog::CallLog(std::filesystem::path const& path)
    : out_(path, std::ios::binary | std::ios::app) {
  if (!out_) throw IoError("cannot open call log " + path.string());
}

void CallLog::Append(CallRecord const& record) {
  auto line = CallRecordJson(record);
  std::lock_guard lock(mu_);
  if (out_.is_open()) {
    out_ << line << '\n';
    out_.flush();
  }
  lines_.push_back(std::move(line));
}

std::vector<std::string> CallLog::Lines() const {
  std::lock_guard lock(mu_);
  return lines_;
}

}  // namespace soclens::llm
