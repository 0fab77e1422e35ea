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

#ifndef SOCLENS_LLM_CALL_LOG_H_
#define SOCLENS_LLM_CALL_LOG_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include "soclens/corpus/timestamp.h"

namespace soclens::llm {

struct CallRecord {
  corpus::Timestamp ts;
  std::string request_fingerprint;
  std::string model;
  int attempt = 1;
  std::string outcome;  // "ok" or a failure name
  std::int64_t latency_ms = 0;
};

std::string CallRecordJson(CallRecord const& record);

// Append-only JSONL log. Safe to share between threads.
class CallLog {
 public:
  // Keeps lines in memory only.
  CallLog() = default;
  // Also appends each line to `path`. Throws IoError if it cannot be opened.
  explicit CallLog(std::filesystem::path const& path);

  void Append(CallRecord const& record);
  std::vector<std::string> Lines() const;

 private:
  mutable std::mutex mu_;
  std::ofstream out_;
  std::vector<std::string> lines_;
};

}  // namespace soclens::llm

#endif  // SOCLENS_LLM_CALL_LOG_H_
