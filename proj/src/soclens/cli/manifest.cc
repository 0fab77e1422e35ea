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

#include "soclens/cli/manifest.h"

#include <nlohmann/json.hpp>
#include "soclens/common/io.h"
#include "soclens/common/sha256.h"

namespace soclens::cli {
namespace {

nlohmann::ordered_json ConfigJson(RunConfig const& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["input"] = c.input.string();
  j["format"] = c.format;
  j["redact"] = c.redact;
  j["redact_rules"] = c.redact_rules;
  j["vectors"] = c.vectors ? c.vectors->string() : "";
  j["hash_dim"] = c.hash_dim.value_or(0);
  j["seed"] = c.seed;
  j["min_cluster_size"] = c.cluster.min_cluster_size;
  j["min_samples"] = c.cluster.EffectiveMinSamples();
  j["target_dim"] = c.cluster.target_dim;
  j["granular_k"] = c.cluster.granular_k;
  j["allow_single_cluster"] = c.cluster.allow_single_cluster;
  j["cluster_selection_epsilon"] = c.cluster.cluster_selection_epsilon;
  j["top_words"] = c.top_words;
  j["stop_words"] = c.stop_words;
  j["block_size"] = c.pipeline.block_size;
  j["categories_per_block"] = c.pipeline.categories_per_block;
  j["taxonomy_size"] = c.pipeline.k_final;
  j["concurrency"] = c.pipeline.concurrency;
  j["model"] = c.pipeline.model;
  j["temperature"] = c.pipeline.temperature;
  j["format_instructions"] = c.pipeline.prompts.format_instructions;
  j["max_record_chars"] = c.pipeline.max_record_chars;
  j["backend"] = c.backend;
  j["endpoint"] = c.endpoint;
  j["script"] = c.script ? c.script->string() : "";
  j["strict_script"] = c.strict_script;
  j["max_attempts"] = c.max_attempts;
  j["backoff_ms"] = c.backoff_ms;
  j["grouping"] = c.grouping ? c.grouping->string() : "";
  j["policy"] = c.policy;
  j["report_formats"] = c.report_formats;
  j["top_k"] = c.top_k;
  j["records"] = c.records;
  j["out_dir"] = c.out_dir.string();
  return j;
}

}  // namespace

Manifest::Manifest(RunConfig config, std::vector<std::string> args)
    : config_(std::move(config)), args_(std::move(args)) {}

void Manifest::AddInput(std::filesystem::path const& path) {
  inputs_.push_back({path.string(), Sha256File(path), "", 0});
}

void Manifest::AddOutput(std::filesystem::path const& path) {
  auto rel = path.lexically_relative(config_.out_dir);
  outputs_.push_back({rel.empty() ? path.string() : rel.generic_string(),
                      Sha256File(path), "", 0});
}

void Manifest::AddTables(std::vector<report::EmittedFile> const& files) {
  for (auto const& f : files) {
    auto rel = f.path.lexically_relative(config_.out_dir);
    outputs_.push_back({rel.empty() ? f.path.string() : rel.generic_string(),
                        f.sha256, std::string(report::PolicyName(f.policy)),
                        f.denominator});
  }
}

void Manifest::AddWarning(std::string warning) {
  warnings_.push_back(std::move(warning));
}

std::string Manifest::ToJson() const {
  nlohmann::ordered_json j;
  j["tool"] = "soclens";
  j["args"] = args_;
  j["config"] = ConfigJson(config_);
  auto files = [](std::vector<File> const& list) {
    auto arr = nlohmann::ordered_json::array();
    for (auto const& f : list) {
      nlohmann::ordered_json e;
      e["path"] = f.path;
      e["sha256"] = f.sha256;
      if (!f.policy.empty()) {
        e["policy"] = f.policy;
        e["denominator"] = f.denominator;
      }
      arr.push_back(e);
    }
    return arr;
  };
  j["inputs"] = files(inputs_);
  j["outputs"] = files(outputs_);
  j["warnings"] = warnings_;
  return j.dump(2) + "\n";
}

void Manifest::Write() const {
  std::error_code ec;
  std::filesystem::create_directories(config_.out_dir, ec);
  if (ec) throw IoError("cannot create " + config_.out_dir.string());
  WriteFileAtomic(config_.out_dir / "manifest.json", ToJson());
}

}  // namespace soclens::cli
