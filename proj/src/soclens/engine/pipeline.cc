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

#include "soclens/engine/pipeline.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>
#include "soclens/common/parallel.h"
#include "soclens/common/text.h"
#include "soclens/engine/checkpoint.h"
#include "soclens/engine/reply_parser.h"
#include "soclens/llm/client.h"

namespace soclens::engine {
namespace {

llm::ChatRequest Request(PipelineConfig const& cfg, std::string prompt) {
  llm::ChatRequest req;
  req.model = cfg.model;
  req.temperature = cfg.temperature;
  req.messages.push_back({llm::Role::kUser, std::move(prompt)});
  return req;
}

bool SameLabel(std::string_view a, std::string_view b) {
  if (ToLowerAscii(a) == ToLowerAscii(b)) return true;
  auto ka = LabelKey(a);
  return !ka.empty() && ka == LabelKey(b);
}

}  // namespace

void PipelineConfig::Validate() const {
  if (block_size == 0) throw ValidationError("block_size must be >= 1");
  if (categories_per_block == 0) {
    throw ValidationError("categories_per_block must be >= 1");
  }
  if (k_final == 0) throw ValidationError("taxonomy size must be >= 1");
  if (concurrency == 0) throw ValidationError("concurrency must be >= 1");
  if (parse_attempts < 1) throw ValidationError("parse_attempts must be >= 1");
  if (max_record_chars == 0) {
    throw ValidationError("max_record_chars must be >= 1");
  }
  if (!std::isfinite(temperature) || temperature < 0) {
    throw ValidationError("temperature must be finite and >= 0");
  }
  if (prompts.extraction.empty() || prompts.merge.empty() ||
      prompts.classification.empty()) {
    throw ValidationError("prompt templates must not be empty");
  }
  if (model.empty()) throw ValidationError("model name must not be empty");
}

std::vector<std::string> CandidatePool::Labels() const {
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (auto const& c : candidates) out.push_back(c.label);
  return out;
}

UseCaseTaxonomy UseCaseTaxonomy::FromModelLabels(
    std::vector<std::string> labels) {
  UseCaseTaxonomy t;
  std::set<std::string> seen;
  for (auto& raw : labels) {
    auto label = std::string(Trim(raw));
    if (label.empty()) continue;
    if (SameLabel(label, kOtherLabel)) {
      t.warnings_.push_back("model supplied '" + label +
                            "'; dropped in favour of the built-in catch-all");
      continue;
    }
    auto dup = std::find_if(t.labels_.begin(), t.labels_.end(),
                            [&](auto const& l) {
                              return ToLowerAscii(l) == ToLowerAscii(label);
                            });
    if (dup != t.labels_.end()) {
      t.warnings_.push_back("duplicate use case '" + label + "' collapsed");
      continue;
    }
    t.labels_.push_back(std::move(label));
  }
  if (t.labels_.empty()) {
    throw ValidationError("taxonomy has no use cases besides Other");
  }
  t.labels_.emplace_back(kOtherLabel);
  return t;
}

UseCaseTaxonomy UseCaseTaxonomy::FromJson(std::string_view text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.empty()) {
    throw ValidationError("taxonomy must be a non-empty JSON array");
  }
  std::vector<std::string> labels;
  for (auto const& item : j) {
    if (!item.is_string()) {
      throw ValidationError("taxonomy entries must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  if (labels.back() != kOtherLabel) {
    throw ValidationError("taxonomy must end with \"Other\"");
  }
  labels.pop_back();
  auto t = FromModelLabels(std::move(labels));
  if (!t.warnings_.empty()) {
    throw ValidationError("taxonomy file: " + t.warnings_.front());
  }
  return t;
}

std::string UseCaseTaxonomy::ToJson() const {
  return nlohmann::json(labels_).dump(2) + "\n";
}

std::optional<std::string> UseCaseTaxonomy::Match(
    std::string_view answer) const {
  auto lower = ToLowerAscii(Trim(answer));
  if (lower.empty()) return std::nullopt;
  for (auto const& l : labels_) {
    if (ToLowerAscii(l) == lower) return l;
  }
  auto key = LabelKey(answer);
  if (key.empty()) return std::nullopt;
  for (auto const& l : labels_) {
    if (LabelKey(l) == key) return l;
  }
  return std::nullopt;
}

std::string_view StatusName(ClassificationStatus status) {
  switch (status) {
    case ClassificationStatus::kOk:
      return "ok";
    case ClassificationStatus::kFuzzyMissMappedToOther:
      return "fuzzy_miss_mapped_to_other";
    case ClassificationStatus::kFailed:
      return "failed";
  }
  return "failed";
}

ClassificationStatus ParseStatus(std::string_view name) {
  for (auto s : {ClassificationStatus::kOk,
                 ClassificationStatus::kFuzzyMissMappedToOther,
                 ClassificationStatus::kFailed}) {
    if (StatusName(s) == name) return s;
  }
  throw ValidationError("unknown classification status '" + std::string(name) +
                        "'");
}

std::string ClassificationsJsonl(std::vector<Classification> const& items) {
  std::string out;
  for (auto const& c : items) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["primary"] = c.primary;
    j["subcase"] = c.subcase;
    j["status"] = std::string(StatusName(c.status));
    j["raw"] = c.raw;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<Classification> ParseClassificationsJsonl(std::string_view text) {
  std::vector<Classification> out;
  std::size_t line_no = 0;
  for (auto line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto bad = ValidationError("classification line " +
                               std::to_string(line_no) + " is malformed");
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw bad;
    try {
      out.push_back({j.at("id").get<std::string>(),
                     j.at("primary").get<std::string>(),
                     j.at("subcase").get<std::string>(),
                     ParseStatus(j.at("status").get<std::string>()),
                     j.at("raw").get<std::string>()});
    } catch (nlohmann::json::exception const&) {
      throw bad;
    }
  }
  return out;
}

std::vector<std::string> ExtractBlockUseCases(
    std::span<corpus::InteractionRecord const> block,
    PipelineConfig const& cfg, llm::ChatBackend& backend, llm::CallLog* log) {
  if (block.empty()) throw ValidationError("cannot extract from an empty block");
  auto req = Request(cfg, ExtractionPrompt(cfg.prompts, block,
                                           cfg.categories_per_block,
                                           cfg.max_record_chars));
  std::size_t last_count = 0;
  for (int attempt = 0; attempt < cfg.parse_attempts; ++attempt) {
    auto labels = ParseCategoryList(llm::Complete(backend, req, log).content);
    last_count = labels.size();
    if (labels.size() == cfg.categories_per_block) {
      for (auto& l : labels) l = TitleCase(l);
      return labels;
    }
  }
  throw MalformedExtraction("expected " +
                            std::to_string(cfg.categories_per_block) +
                            " categories, reply had " +
                            std::to_string(last_count));
}

CandidatePool ExtractCandidates(corpus::Corpus const& corpus,
                                PipelineConfig const& cfg,
                                llm::ChatBackend& backend, llm::CallLog* log) {
  cfg.Validate();
  auto blocks = PartitionBlocks(corpus.size(), cfg.block_size);
  std::vector<std::vector<std::string>> labels(blocks.size());
  std::vector<std::string> errors(blocks.size());
  ParallelForEach(blocks.size(), cfg.concurrency, [&](std::size_t b) {
    try {
      labels[b] = ExtractBlockUseCases(BlockRecords(corpus, blocks[b]), cfg,
                                       backend, log);
    } catch (Error const& e) {
      errors[b] = e.what();
    }
  });
  CandidatePool pool;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!errors[b].empty()) {
      pool.failed_blocks.push_back(b);
      pool.warnings.push_back("block " + std::to_string(b) +
                              " extraction failed: " + errors[b]);
      continue;
    }
    for (auto& l : labels[b]) pool.candidates.push_back({b, std::move(l)});
  }
  auto ok = blocks.size() - pool.failed_blocks.size();
  if (2 * ok < blocks.size()) {
    throw PipelineError("only " + std::to_string(ok) + " of " +
                        std::to_string(blocks.size()) +
                        " blocks produced use cases");
  }
  return pool;
}

UseCaseTaxonomy MergeUseCases(CandidatePool const& pool,
                              PipelineConfig const& cfg,
                              llm::ChatBackend& backend, llm::CallLog* log) {
  cfg.Validate();
  if (pool.candidates.empty()) {
    throw PipelineError("candidate pool is empty; nothing to merge");
  }
  auto req = Request(cfg, MergePrompt(cfg.prompts, pool.Labels(), cfg.k_final));
  std::string problem;
  for (int attempt = 0; attempt < cfg.parse_attempts; ++attempt) {
    auto labels = ParseCategoryList(llm::Complete(backend, req, log).content);
    if (labels.empty()) {
      problem = "reply contained no use cases";
      continue;
    }
    if (labels.size() > cfg.k_final) {
      problem = "reply listed " + std::to_string(labels.size()) +
                " use cases, more than " + std::to_string(cfg.k_final);
      continue;
    }
    for (auto& l : labels) l = TitleCase(l);
    UseCaseTaxonomy taxonomy;
    try {
      taxonomy = UseCaseTaxonomy::FromModelLabels(std::move(labels));
    } catch (ValidationError const& e) {
      problem = e.what();
      continue;
    }
    return taxonomy;
  }
  throw MalformedMerge("merge reply unusable: " + problem);
}

Classification ClassifyInteraction(corpus::InteractionRecord const& record,
                                   UseCaseTaxonomy const& taxonomy,
                                   PipelineConfig const& cfg,
                                   llm::ChatBackend& backend,
                                   llm::CallLog* log) {
  Classification out;
  out.id = record.id;
  auto req = Request(
      cfg, ClassificationPrompt(cfg.prompts, taxonomy.labels(), record.prompt));
  try {
    out.raw = llm::Complete(backend, req, log).content;
  } catch (Error const&) {
    out.status = ClassificationStatus::kFailed;
    return out;
  }
  auto reply = ParseClassificationReply(out.raw);
  if (auto match = taxonomy.Match(reply.primary)) {
    out.primary = *match;
    out.status = ClassificationStatus::kOk;
  } else {
    out.primary = std::string(kOtherLabel);
    out.status = ClassificationStatus::kFuzzyMissMappedToOther;
  }
  out.subcase = reply.subcase;
  if (SameLabel(out.subcase, out.primary) ||
      SameLabel(out.subcase, reply.primary)) {
    out.subcase.clear();
  }
  return out;
}

std::vector<Classification> ClassifyAll(corpus::Corpus const& corpus,
                                        UseCaseTaxonomy const& taxonomy,
                                        PipelineConfig const& cfg,
                                        llm::ChatBackend& backend,
                                        llm::CallLog* log) {
  cfg.Validate();
  std::vector<Classification> out(corpus.size());
  ParallelForEach(corpus.size(), cfg.concurrency, [&](std::size_t i) {
    out[i] = ClassifyInteraction(corpus[i], taxonomy, cfg, backend, log);
  });
  return out;
}

ClassifiedCorpus RunPipeline(
    corpus::Corpus const& corpus, PipelineConfig const& cfg,
    llm::ChatBackend& backend, llm::CallLog* log,
    std::optional<std::filesystem::path> const& checkpoint_dir) {
  cfg.Validate();
  if (corpus.empty()) throw EmptyCorpus();
  std::optional<Checkpoint> ckpt;
  auto done = Stage::kNone;
  if (checkpoint_dir) {
    ckpt.emplace(*checkpoint_dir, PipelineDigest(corpus, cfg));
    done = ckpt->stage();
  }

  ClassifiedCorpus out;
  if (done >= Stage::kExtracted) {
    out.pool = ckpt->LoadPool();
  } else {
    out.pool = ExtractCandidates(corpus, cfg, backend, log);
    if (ckpt) ckpt->SavePool(out.pool);
  }
  out.warnings = out.pool.warnings;

  if (done >= Stage::kMerged) {
    out.taxonomy = ckpt->LoadTaxonomy();
  } else {
    out.taxonomy = MergeUseCases(out.pool, cfg, backend, log);
    if (ckpt) ckpt->SaveTaxonomy(out.taxonomy);
  }
  for (auto const& w : out.taxonomy.warnings()) out.warnings.push_back(w);
  if (out.taxonomy.size() - 1 < cfg.k_final) {
    out.warnings.push_back("taxonomy has " +
                           std::to_string(out.taxonomy.size() - 1) +
                           " use cases, fewer than the " +
                           std::to_string(cfg.k_final) + " requested");
  }

  if (done >= Stage::kClassified) {
    out.classifications = ckpt->LoadClassified();
    if (out.classifications.size() != corpus.size()) {
      throw PipelineError("checkpointed classifications do not match corpus");
    }
  } else {
    out.classifications = ClassifyAll(corpus, out.taxonomy, cfg, backend, log);
    if (ckpt) ckpt->SaveClassified(out.classifications);
  }
  std::size_t failed = 0;
  for (auto const& c : out.classifications) {
    failed += c.status == ClassificationStatus::kFailed;
  }
  if (failed) {
    out.warnings.push_back(std::to_string(failed) +
                           " records could not be classified");
  }
  return out;
}

}  // namespace soclens::engine
