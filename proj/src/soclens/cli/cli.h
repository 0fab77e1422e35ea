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

#ifndef SOCLENS_CLI_CLI_H_
#define SOCLENS_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "soclens/classic/density.h"
#include "soclens/engine/pipeline.h"

namespace soclens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitPipeline = 2;

struct RunConfig {
  std::string command;  // stats, model-classic, model-llm, report, synth

  std::filesystem::path input;
  std::string format = "auto";  // auto, jsonl, csv
  bool redact = false;                   // built-in email and IPv4 rules
  std::vector<std::string> redact_rules;  // extra NAME=REGEX rules

  std::optional<std::filesystem::path> vectors;
  std::optional<std::size_t> hash_dim;
  std::uint64_t seed = 0;
  classic::ClusterParams cluster;
  std::size_t top_words = 10;
  bool stop_words = false;  // drop common English words from topic words

  engine::PipelineConfig pipeline;
  std::string backend;  // http or replay
  std::string endpoint;
  std::optional<std::filesystem::path> script;
  bool strict_script = false;
  int max_attempts = 3;
  int backoff_ms = 1000;

  std::optional<std::filesystem::path> grouping;
  std::string policy;  // empty: per-report default
  std::vector<std::string> report_formats = {"csv", "json", "svg"};
  std::size_t top_k = 5;

  std::size_t records = 250;  // synth only

  std::filesystem::path out_dir = "out";
};

// Parses arguments (program name first) and an optional --config file.
// Throws ValidationError for usage errors; the message includes help text
// when relevant.
RunConfig ParseArgs(std::vector<std::string> const& args);

// Full CLI: parses, dispatches and maps failures to exit codes.
int Run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace soclens::cli

#endif  // SOCLENS_CLI_CLI_H_
