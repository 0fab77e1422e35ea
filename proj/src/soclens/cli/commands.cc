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

#include "soclens/cli/commands.h"

#include <iomanip>
#include <ostream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include "soclens/classic/ctfidf.h"
#include "soclens/classic/density.h"
#include "soclens/classic/export.h"
#include "soclens/classic/granular.h"
#include "soclens/classic/pca.h"
#include "soclens/cli/synth.h"
#include "soclens/common/io.h"
#include "soclens/common/text.h"
#include "soclens/corpus/daily.h"
#include "soclens/corpus/redact.h"
#include "soclens/llm/http_backend.h"
#include "soclens/llm/replay_backend.h"
#include "soclens/llm/retry.h"
#include "soclens/report/emit.h"
#include "soclens/report/tables.h"
#include "soclens/vectors/hash_embed.h"

namespace soclens::cli {
namespace {

void EnsureDir(std::filesystem::path const& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

std::filesystem::path WriteOutput(RunConfig const& cfg, Manifest& manifest,
                                  std::string const& name,
                                  std::string_view content) {
  EnsureDir(cfg.out_dir);
  auto path = cfg.out_dir / name;
  WriteFileAtomic(path, content);
  manifest.AddOutput(path);
  return path;
}

void Warn(Manifest& manifest, std::ostream& err, std::string const& message) {
  err << "warning: " << message << "\n";
  manifest.AddWarning(message);
}

corpus::Corpus LoadInput(RunConfig const& cfg, Manifest& manifest,
                         std::ostream& err) {
  if (cfg.input.empty()) throw ValidationError("--input is required");
  auto format = cfg.format == "auto" ? corpus::FormatFromPath(cfg.input)
                                     : corpus::ParseFormat(cfg.format);
  auto loaded = corpus::LoadCorpus(cfg.input, format);
  manifest.AddInput(cfg.input);
  for (auto const& e : loaded.errors) {
    Warn(manifest, err,
         cfg.input.string() + ":" + std::to_string(e.line) + ": " + e.reason);
  }
  if (!cfg.redact && cfg.redact_rules.empty()) return std::move(loaded.corpus);
  std::vector<corpus::RedactionRule> rules;
  for (auto const& r : cfg.redact_rules) {
    rules.push_back(corpus::Redactor::ParseRule(r));
  }
  return corpus::Redactor(rules).Apply(loaded.corpus);
}

std::set<report::EmitFormat> Formats(RunConfig const& cfg) {
  std::set<report::EmitFormat> out;
  for (auto const& f : cfg.report_formats) {
    if (!f.empty()) out.insert(report::ParseEmitFormat(f));
  }
  return out;
}

report::DenominatorPolicy Policy(RunConfig const& cfg,
                                 report::DenominatorPolicy fallback) {
  return cfg.policy.empty() ? fallback : report::ParsePolicy(cfg.policy);
}

void EmitTables(RunConfig const& cfg, Manifest& manifest,
                std::vector<report::NamedTable> const& tables) {
  manifest.AddTables(report::Emit(tables, cfg.out_dir / "reports", Formats(cfg)));
}

std::string Slug(std::string_view label) {
  std::string out;
  for (char c : ToLowerAscii(label)) {
    bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      out += c;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "label" : out;
}

std::vector<report::NamedTable> ClassificationTables(
    RunConfig const& cfg, std::vector<engine::Classification> const& items) {
  std::vector<report::NamedTable> tables;
  auto policy = Policy(cfg, report::DenominatorPolicy::kAllRecords);
  tables.push_back({"use_cases", "Primary use cases",
                    report::Percentages(
                        report::ClassificationFrequencyTable(items, policy))});
  auto subcases = report::SubcaseReport(items, cfg.top_k);
  bool has_other = false;
  for (auto const& [primary, t] : subcases) {
    has_other = has_other || primary == engine::kOtherLabel;
  }
  if (!has_other) {
    for (auto const& [primary, t] : report::SubcaseReport(items, SIZE_MAX)) {
      if (primary == engine::kOtherLabel) subcases.emplace_back(primary, t);
    }
  }
  for (std::size_t i = 0; i < subcases.size(); ++i) {
    auto const& [primary, t] = subcases[i];
    std::ostringstream name;
    name << "subcases_" << std::setw(2) << std::setfill('0') << (i + 1) << "_"
         << Slug(primary);
    tables.push_back({name.str(), "Sub-cases of " + primary,
                      report::Percentages(t)});
  }
  return tables;
}

std::string FirstLine(std::string const& text) {
  return std::string(text.substr(0, text.find('\n')));
}

}  // namespace

void RunStats(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
              std::ostream& err) {
  auto corpus = LoadInput(cfg, manifest, err);
  auto series = corpus::DailyCounts(corpus);
  WriteOutput(cfg, manifest, "daily_counts.csv", series.ToCsv());
  nlohmann::ordered_json j;
  j["records"] = series.total;
  j["first_day"] = corpus::FormatDate(series.first_day);
  j["last_day"] = corpus::FormatDate(series.last_day());
  j["days"] = series.days();
  j["mean_per_day"] = series.mean_per_day();
  WriteOutput(cfg, manifest, "stats.json", j.dump(2) + "\n");
  out << "records=" << series.total << " days=" << series.days()
      << " first_day=" << corpus::FormatDate(series.first_day)
      << " last_day=" << corpus::FormatDate(series.last_day()) << "\n";
  out << "mean_per_day=" << report::FormatPercent(series.mean_per_day(), 2)
      << "\n";
}

void RunModelClassic(RunConfig const& cfg, Manifest& manifest,
                     std::ostream& out, std::ostream& err) {
  if (cfg.vectors && cfg.hash_dim) {
    throw ValidationError("give either --vectors or --hash-dim, not both");
  }
  if (!cfg.vectors && !cfg.hash_dim) {
    throw ValidationError(
        "model-classic needs --vectors <file> or --hash-dim <n> for the test "
        "embedder");
  }
  cfg.cluster.Validate();
  auto corpus = LoadInput(cfg, manifest, err);
  auto vectors = [&] {
    if (cfg.vectors) {
      auto loaded = LoadVectors(*cfg.vectors, corpus);
      manifest.AddInput(*cfg.vectors);
      if (!loaded.dropped_ids.empty()) {
        Warn(manifest, err,
             std::to_string(loaded.dropped_ids.size()) +
                 " vector ids not in the corpus were dropped");
      }
      return std::move(loaded.vectors);
    }
    return HashEmbed(corpus, *cfg.hash_dim, cfg.seed);
  }();
  if (cfg.cluster.target_dim > vectors.dim()) {
    throw ValidationError("--target-dim " +
                          std::to_string(cfg.cluster.target_dim) +
                          " exceeds the vector dimension " +
                          std::to_string(vectors.dim()));
  }
  auto pca = classic::ReduceDims(vectors, cfg.cluster.target_dim);
  for (auto const& w : pca.warnings) Warn(manifest, err, w);
  auto assignment = classic::ClusterDensity(pca.projected, cfg.cluster);
  for (auto const& w : assignment.warnings) Warn(manifest, err, w);
  WriteOutput(cfg, manifest, "assignments.csv",
              classic::AssignmentCsv(assignment));

  auto topic_policy = Policy(cfg, report::DenominatorPolicy::kAssignedOnly);
  std::vector<report::NamedTable> tables;
  out << "records=" << assignment.size()
      << " topics=" << assignment.topic_count()
      << " outliers=" << assignment.outliers << "\n";
  if (assignment.topic_count() == 0) {
    WriteOutput(cfg, manifest, "topics.json", "[]\n");
    if (topic_policy == report::DenominatorPolicy::kAllRecords) {
      tables.push_back({"topic_frequencies", "Topic frequencies",
                        report::Percentages(report::TopicFrequencyTable(
                            assignment, topic_policy))});
    }
    EmitTables(cfg, manifest, tables);
    return;
  }

  auto model = classic::BuildCtfidf(
      corpus, assignment, TokenizerOptions{.drop_stop_words = cfg.stop_words});
  auto summaries = model.Summaries(cfg.top_words);
  WriteOutput(cfg, manifest, "topics.json", classic::SummariesJson(summaries));
  for (auto const& s : summaries) {
    out << "topic " << s.topic << " (" << s.frequency << "): " << s.Render()
        << "\n";
  }
  tables.push_back({"topic_frequencies", "Topic frequencies",
                    report::Percentages(
                        report::TopicFrequencyTable(assignment, topic_policy))});

  if (cfg.cluster.granular_k > model.topic_count()) {
    Warn(manifest, err,
         "granular k " + std::to_string(cfg.cluster.granular_k) +
             " exceeds the " + std::to_string(model.topic_count()) +
             " topics found; granular clusters skipped");
  } else {
    auto grouping = classic::GranularClusters(model, cfg.cluster.granular_k);
    WriteOutput(cfg, manifest, "granular.csv", classic::GroupingCsv(grouping));
    tables.push_back({"granular_clusters", "Granular clusters",
                      report::GroupedReport(grouping, topic_policy,
                                            assignment.outliers)});
  }
  EmitTables(cfg, manifest, tables);
}

void RunModelLlm(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
                 std::ostream& err) {
  cfg.pipeline.Validate();
  std::shared_ptr<llm::ChatBackend> inner;
  std::shared_ptr<llm::ReplayBackend> replay;
  if (cfg.backend == "replay") {
    if (!cfg.script) throw ValidationError("--backend replay needs --script");
    replay = llm::ReplayBackend::Load(*cfg.script, cfg.strict_script);
    manifest.AddInput(*cfg.script);
    inner = replay;
  } else if (cfg.backend == "http") {
    if (cfg.endpoint.empty()) {
      throw ValidationError("--backend http needs --endpoint");
    }
    inner = std::make_shared<llm::HttpBackend>(
        llm::HttpBackend::ConfigFromEnv(cfg.endpoint));
  } else {
    throw ValidationError("--backend must be http or replay");
  }
  llm::RetryPolicy policy;
  policy.max_attempts = cfg.max_attempts;
  policy.base_backoff = std::chrono::milliseconds(cfg.backoff_ms);
  policy.max_in_flight = static_cast<int>(cfg.pipeline.concurrency);
  auto backend = llm::WithRetry(inner, policy);

  auto corpus = LoadInput(cfg, manifest, err);
  EnsureDir(cfg.out_dir);
  auto log_path = cfg.out_dir / "calls.jsonl";
  llm::CallLog log(log_path);
  auto result = engine::RunPipeline(corpus, cfg.pipeline, *backend, &log,
                                    cfg.out_dir / "checkpoint");
  for (auto const& w : result.warnings) Warn(manifest, err, w);
  if (replay) replay->Finish();

  WriteOutput(cfg, manifest, "taxonomy.json", result.taxonomy.ToJson());
  WriteOutput(cfg, manifest, "classifications.jsonl",
              engine::ClassificationsJsonl(result.classifications));
  manifest.AddOutput(log_path);
  EmitTables(cfg, manifest, ClassificationTables(cfg, result.classifications));

  std::map<engine::ClassificationStatus, std::size_t> status;
  for (auto const& c : result.classifications) ++status[c.status];
  out << "blocks=" << engine::PartitionBlocks(corpus.size(),
                                              cfg.pipeline.block_size)
                          .size()
      << " candidates=" << result.pool.candidates.size()
      << " taxonomy=" << result.taxonomy.size() << "\n";
  for (auto const& [s, n] : status) {
    out << engine::StatusName(s) << "=" << n << "\n";
  }
}

void RunReport(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
               std::ostream& err) {
  (void)err;
  if (cfg.input.empty()) throw ValidationError("--input is required");
  auto text = ReadFile(cfg.input);
  manifest.AddInput(cfg.input);
  std::vector<report::NamedTable> tables;
  auto header = FirstLine(text);
  if (!header.empty() && header.back() == '\r') header.pop_back();

  if (cfg.input.extension() == ".jsonl") {
    auto items = engine::ParseClassificationsJsonl(text);
    tables = ClassificationTables(cfg, items);
  } else {
    auto policy = Policy(cfg, report::DenominatorPolicy::kAssignedOnly);
    std::map<int, std::size_t> freqs;
    std::size_t outliers = 0;
    report::FreqTable table;
    if (header == "record_id,topic") {
      auto assignment = classic::ParseAssignmentCsv(text);
      freqs = assignment.topic_frequencies;
      outliers = assignment.outliers;
      table = report::TopicFrequencyTable(assignment, policy);
    } else if (header == "topic,frequency") {
      freqs = classic::ParseFrequencyCsv(text);
      std::map<std::string, std::size_t> counts;
      for (auto const& [t, n] : freqs) {
        if (t == classic::kOutlier) {
          outliers = n;
        } else {
          counts[std::to_string(t)] = n;
        }
      }
      if (policy == report::DenominatorPolicy::kAllRecords && outliers) {
        counts[std::string(report::kOutlierRow)] = outliers;
      }
      freqs.erase(classic::kOutlier);
      table = report::FreqTable::FromCounts(counts, policy);
    } else {
      throw ValidationError(
          "report input must be classifications (.jsonl), an assignment CSV "
          "(record_id,topic) or a frequency CSV (topic,frequency)");
    }
    tables.push_back(
        {"topic_frequencies", "Topic frequencies", report::Percentages(table)});
    if (cfg.grouping) {
      auto parsed = classic::ParseGroupingCsv(ReadFile(*cfg.grouping));
      manifest.AddInput(*cfg.grouping);
      auto grouping = classic::GranularGrouping::FromTable(
          parsed.group_of, parsed.names, freqs);
      tables.push_back({"granular_clusters", "Granular clusters",
                        report::GroupedReport(grouping, policy, outliers)});
    }
  }
  EmitTables(cfg, manifest, tables);
  for (auto const& t : tables) {
    out << t.name << " (" << report::PolicyName(t.table.policy)
        << ", denominator " << t.table.denominator << ")\n";
    for (auto const& r : t.table.rows) {
      out << "  " << (r.label.empty() ? "(blank)" : r.label) << "\t"
          << r.count << "\t" << report::RenderTable(r.percent) << "\n";
    }
  }
}

void RunSynth(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
              std::ostream& err) {
  (void)err;
  SynthOptions options;
  options.records = cfg.records;
  options.seed = cfg.seed;
  options.pipeline = cfg.pipeline;
  auto fx = MakeSynthFixture(options);
  WriteOutput(cfg, manifest, "corpus.jsonl",
              corpus::SerializeCorpus(fx.corpus, corpus::Format::kJsonl));
  WriteOutput(cfg, manifest, "script.jsonl", llm::SerializeScript(fx.script));
  WriteOutput(cfg, manifest, "expected_taxonomy.json",
              nlohmann::json(fx.taxonomy).dump(2) + "\n");
  WriteOutput(cfg, manifest, "expected_classifications.jsonl",
              engine::ClassificationsJsonl(fx.expected));
  out << "records=" << fx.corpus.size() << " script_entries="
      << fx.script.size() << "\n";
}

}  // namespace soclens::cli
