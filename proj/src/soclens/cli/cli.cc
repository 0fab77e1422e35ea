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

#include "soclens/cli/cli.h"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include "soclens/cli/commands.h"
#include "soclens/cli/manifest.h"

namespace soclens::cli {
namespace {

// TOML-style config where section headers only group keys: every key maps to
// the flag of the same name, with '_' accepted for '-'.
class FlatConfig : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> out;
    for (auto& item : CLI::ConfigTOML::from_config(input)) {
      if (item.name == "++" || item.name == "--") continue;
      item.parents.clear();
      std::replace(item.name.begin(), item.name.end(), '_', '-');
      out.push_back(std::move(item));
    }
    return out;
  }
};

class HelpRequested : public Error {
 public:
  using Error::Error;
};

}  // namespace

RunConfig ParseArgs(std::vector<std::string> const& args) {
  RunConfig c;
  CLI::App app{"Topic modeling and LLM use-case classification of SOC "
               "assistant logs",
               "soclens"};
  app.config_formatter(std::make_shared<FlatConfig>());
  app.set_config("--config", "", "TOML-style file of key = value settings");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  std::string input, vectors, script, grouping, out_dir = c.out_dir.string();
  std::size_t hash_dim = 0, min_samples = 0;
  bool no_format = false;

  app.add_option("--input", input, "Corpus (JSONL or CSV) or saved results");
  app.add_option("--format", c.format, "auto, jsonl or csv")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  app.add_flag("--redact", c.redact, "Mask email and IPv4 addresses");
  app.add_option("--redact-rule", c.redact_rules, "Extra NAME=REGEX rule");
  app.add_option("--vectors", vectors, "Embedding file for model-classic");
  app.add_option("--hash-dim", hash_dim, "Use the hashing test embedder");
  app.add_option("--seed", c.seed, "Seed for the test embedder and synth");
  app.add_option("--min-cluster-size", c.cluster.min_cluster_size)
      ->capture_default_str();
  app.add_option("--min-samples", min_samples, "Defaults to min-cluster-size");
  app.add_option("--target-dim", c.cluster.target_dim)->capture_default_str();
  app.add_option("--granular-k", c.cluster.granular_k)->capture_default_str();
  app.add_flag("--allow-single-cluster", c.cluster.allow_single_cluster);
  app.add_option("--cluster-selection-epsilon",
                 c.cluster.cluster_selection_epsilon)
      ->capture_default_str();
  app.add_option("--top-words", c.top_words)->capture_default_str();
  app.add_flag("--stop-words", c.stop_words,
               "Leave common English words out of topic words");
  app.add_option("--block-size", c.pipeline.block_size)->capture_default_str();
  app.add_option("--categories-per-block", c.pipeline.categories_per_block)
      ->capture_default_str();
  app.add_option("--taxonomy-size,--k-final", c.pipeline.k_final)->capture_default_str();
  app.add_option("--concurrency", c.pipeline.concurrency)
      ->capture_default_str();
  app.add_option("--model", c.pipeline.model)->capture_default_str();
  app.add_option("--max-record-chars", c.pipeline.max_record_chars)
      ->capture_default_str();
  app.add_flag("--no-format-instructions", no_format,
               "Send the prompt templates without the output format line");
  app.add_option("--backend", c.backend, "http or replay")
      ->check(CLI::IsMember({"http", "replay"}));
  app.add_option("--endpoint", c.endpoint, "Chat completion URL");
  app.add_option("--script", script, "Replay script (JSONL)");
  app.add_flag("--strict-script", c.strict_script,
               "Fail when replay entries are left unused");
  app.add_option("--max-attempts", c.max_attempts)->capture_default_str();
  app.add_option("--backoff-ms", c.backoff_ms)->capture_default_str();
  app.add_option("--grouping", grouping, "topic,group,group_name CSV");
  app.add_option("--policy", c.policy, "assigned_only or all_records")
      ->check(CLI::IsMember({"assigned_only", "all_records"}));
  app.add_option("--report-formats", c.report_formats)
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--top-k", c.top_k, "Primaries with sub-case tables")
      ->capture_default_str();
  app.add_option("--records", c.records, "Synthetic corpus size")
      ->capture_default_str();
  app.add_option("--out-dir", out_dir)->capture_default_str();

  std::vector<CLI::App*> subs = {
      app.add_subcommand("stats", "Daily interaction counts"),
      app.add_subcommand("model-classic", "Embedding and density clustering"),
      app.add_subcommand("model-llm", "Two-layer LLM use-case workflow"),
      app.add_subcommand("report", "Tables and charts from saved results"),
      app.add_subcommand("synth", "Synthetic corpus and replay script")};
  for (auto* s : subs) s->fallthrough();

  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    throw HelpRequested(app.help());
  } catch (CLI::ParseError const& e) {
    throw ValidationError(std::string(e.what()) + "\n\n" + app.help());
  }

  for (auto* s : subs) {
    if (s->parsed()) c.command = s->get_name();
  }
  c.input = input;
  if (!vectors.empty()) c.vectors = vectors;
  if (hash_dim) c.hash_dim = hash_dim;
  if (min_samples) c.cluster.min_samples = min_samples;
  if (!script.empty()) c.script = script;
  if (!grouping.empty()) c.grouping = grouping;
  c.out_dir = out_dir;
  c.pipeline.prompts.format_instructions = !no_format;
  return c;
}

int Run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  try {
    auto cfg = ParseArgs(args);
    Manifest manifest(cfg, args);
    if (cfg.command == "stats") {
      RunStats(cfg, manifest, out, err);
    } else if (cfg.command == "model-classic") {
      RunModelClassic(cfg, manifest, out, err);
    } else if (cfg.command == "model-llm") {
      RunModelLlm(cfg, manifest, out, err);
    } else if (cfg.command == "report") {
      RunReport(cfg, manifest, out, err);
    } else {
      RunSynth(cfg, manifest, out, err);
    }
    manifest.Write();
    return kExitOk;
  } catch (HelpRequested const& e) {
    out << e.what();
    return kExitOk;
  } catch (ValidationError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (IoError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kExitPipeline;
  }
}

}  // namespace soclens::cli
