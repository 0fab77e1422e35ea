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

#ifndef SOCLENS_ENGINE_PIPELINE_H_
#define SOCLENS_ENGINE_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/corpus/corpus.h"
#include "soclens/engine/blocks.h"
#include "soclens/engine/prompts.h"
#include "soclens/llm/call_log.h"
#include "soclens/llm/chat.h"

namespace soclens::engine {

inline constexpr std::string_view kOtherLabel = "Other";

class PipelineError : public Error {
 public:
  using Error::Error;
};

class MalformedExtraction : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class MalformedMerge : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

struct PipelineConfig {
  std::size_t block_size = 100;
  std::size_t categories_per_block = 12;
  std::size_t k_final = 20;
  PromptTemplates prompts;
  std::size_t concurrency = 4;
  std::string model = "gpt-4-0613";
  double temperature = 0.0;
  // Times a request is sent while its reply fails to parse.
  int parse_attempts = 3;
  std::size_t max_record_chars = 2000;

  void Validate() const;
};

struct Candidate {
  std::size_t block = 0;
  std::string label;

  friend bool operator==(Candidate const&, Candidate const&) = default;
};

struct CandidatePool {
  std::vector<Candidate> candidates;  // block order, reply order within
  std::vector<std::size_t> failed_blocks;
  std::vector<std::string> warnings;

  std::vector<std::string> Labels() const;
};

class UseCaseTaxonomy {
 public:
  // Drops model-supplied "Other" entries and case-insensitive duplicates
  // (with a warning each), then appends "Other". Throws ValidationError when
  // nothing but "Other" would remain.
  static UseCaseTaxonomy FromModelLabels(std::vector<std::string> labels);
  // Parses a JSON array of strings that must end in "Other".
  static UseCaseTaxonomy FromJson(std::string_view text);

  // All entries, "Other" last.
  std::vector<std::string> const& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::vector<std::string> const& warnings() const { return warnings_; }
  std::string ToJson() const;

  // Taxonomy label for a model answer: case-insensitive match first, then
  // punctuation- and whitespace-insensitive match.
  std::optional<std::string> Match(std::string_view answer) const;

  friend bool operator==(UseCaseTaxonomy const& a, UseCaseTaxonomy const& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> warnings_;
};

enum class ClassificationStatus { kOk, kFuzzyMissMappedToOther, kFailed };

std::string_view StatusName(ClassificationStatus status);
ClassificationStatus ParseStatus(std::string_view name);

struct Classification {
  std::string id;
  std::string primary;  // empty when failed
  std::string subcase;  // empty when absent or equal to primary
  ClassificationStatus status = ClassificationStatus::kOk;
  std::string raw;      // verbatim reply; empty when failed

  friend bool operator==(Classification const&, Classification const&) =
      default;
};

// {id, primary, subcase, status, raw} per line.
std::string ClassificationsJsonl(std::vector<Classification> const& items);
std::vector<Classification> ParseClassificationsJsonl(std::string_view text);

struct ClassifiedCorpus {
  CandidatePool pool;
  UseCaseTaxonomy taxonomy;
  std::vector<Classification> classifications;  // corpus order
  std::vector<std::string> warnings;
};

// Prompts one block and returns exactly categories_per_block title-cased
// labels. Throws MalformedExtraction if no reply within parse_attempts has
// the right count.
std::vector<std::string> ExtractBlockUseCases(
    std::span<corpus::InteractionRecord const> block,
    PipelineConfig const& cfg, llm::ChatBackend& backend,
    llm::CallLog* log = nullptr);

// Runs every block. Failed blocks are recorded and left out of the pool;
// throws PipelineError when fewer than half of the blocks succeed.
CandidatePool ExtractCandidates(corpus::Corpus const& corpus,
                                PipelineConfig const& cfg,
                                llm::ChatBackend& backend,
                                llm::CallLog* log = nullptr);

// One call over the whole pool. Fewer than k_final labels gives a warning;
// no labels or more than k_final throw MalformedMerge.
UseCaseTaxonomy MergeUseCases(CandidatePool const& pool,
                              PipelineConfig const& cfg,
                              llm::ChatBackend& backend,
                              llm::CallLog* log = nullptr);

// Never throws for backend failures; those yield status kFailed.
Classification ClassifyInteraction(corpus::InteractionRecord const& record,
                                   UseCaseTaxonomy const& taxonomy,
                                   PipelineConfig const& cfg,
                                   llm::ChatBackend& backend,
                                   llm::CallLog* log = nullptr);

std::vector<Classification> ClassifyAll(corpus::Corpus const& corpus,
                                        UseCaseTaxonomy const& taxonomy,
                                        PipelineConfig const& cfg,
                                        llm::ChatBackend& backend,
                                        llm::CallLog* log = nullptr);

// Extraction, merge and classification. With a checkpoint directory, stages
// already recorded there for the same corpus and configuration are loaded
// instead of rerun, and each finished stage is saved.
ClassifiedCorpus RunPipeline(
    corpus::Corpus const& corpus, PipelineConfig const& cfg,
    llm::ChatBackend& backend, llm::CallLog* log = nullptr,
    std::optional<std::filesystem::path> const& checkpoint_dir = std::nullopt);

}  // namespace soclens::engine

#endif  // SOCLENS_ENGINE_PIPELINE_H_
