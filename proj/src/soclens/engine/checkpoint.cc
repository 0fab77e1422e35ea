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

#include "soclens/engine/checkpoint.h"

#include <nlohmann/json.hpp>
#include "soclens/common/io.h"
#include "soclens/common/sha256.h"
#include "soclens/common/text.h"

namespace soclens::engine {
namespace {

constexpr char kPool[] = "pool.jsonl";
constexpr char kTaxonomy[] = "taxonomy.json";
constexpr char kClassified[] = "classified.jsonl";
constexpr char kStage[] = "stage.json";

}  // namespace

std::string PipelineDigest(corpus::Corpus const& corpus,
                           PipelineConfig const& cfg) {
  nlohmann::ordered_json j;
  j["corpus"] = Sha256Hex(corpus::SerializeCorpus(corpus, corpus::Format::kJsonl));
  j["block_size"] = cfg.block_size;
  j["categories_per_block"] = cfg.categories_per_block;
  j["k_final"] = cfg.k_final;
  j["model"] = cfg.model;
  j["temperature"] = cfg.temperature;
  j["max_record_chars"] = cfg.max_record_chars;
  auto const& p = cfg.prompts;
  j["prompts"] = {p.extraction,        p.merge,        p.classification,
                  p.format_instructions, p.extraction_format, p.merge_format,
                  p.classification_format};
  return Sha256Hex(j.dump());
}

Checkpoint::Checkpoint(std::filesystem::path dir, std::string digest)
    : dir_(std::move(dir)), digest_(std::move(digest)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create " + dir_.string() + ": " + ec.message());
}

Stage Checkpoint::stage() const {
  auto path = dir_ / kStage;
  if (!std::filesystem::exists(path)) return Stage::kNone;
  auto j = nlohmann::json::parse(ReadFile(path), nullptr, false);
  if (j.is_discarded() || !j.is_object() ||
      j.value("input_digest", std::string()) != digest_) {
    return Stage::kNone;
  }
  auto s = j.value("stage", 0);
  if (s < 0 || s > 3) return Stage::kNone;
  return static_cast<Stage>(s);
}

void Checkpoint::Mark(Stage stage,
                      std::vector<std::size_t> const& failed_blocks) {
  nlohmann::ordered_json j;
  j["stage"] = static_cast<int>(stage);
  j["input_digest"] = digest_;
  j["failed_blocks"] = failed_blocks;
  WriteFileAtomic(dir_ / kStage, j.dump(2) + "\n");
}

std::vector<std::size_t> Checkpoint::FailedBlocks() const {
  auto j = nlohmann::json::parse(ReadFile(dir_ / kStage), nullptr, false);
  if (j.is_discarded()) return {};
  return j.value("failed_blocks", std::vector<std::size_t>{});
}

void Checkpoint::SavePool(CandidatePool const& pool) {
  std::string out;
  for (auto const& c : pool.candidates) {
    nlohmann::ordered_json j;
    j["block"] = c.block;
    j["label"] = c.label;
    out += j.dump() + "\n";
  }
  WriteFileAtomic(dir_ / kPool, out);
  Mark(Stage::kExtracted, pool.failed_blocks);
}

CandidatePool Checkpoint::LoadPool() const {
  CandidatePool pool;
  auto text = ReadFile(dir_ / kPool);
  for (auto line : SplitLines(text)) {
    if (Trim(line).empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("block") || !j.contains("label")) {
      throw ValidationError("corrupt checkpoint pool entry");
    }
    pool.candidates.push_back(
        {j["block"].get<std::size_t>(), j["label"].get<std::string>()});
  }
  pool.failed_blocks = FailedBlocks();
  return pool;
}

void Checkpoint::SaveTaxonomy(UseCaseTaxonomy const& taxonomy) {
  WriteFileAtomic(dir_ / kTaxonomy, taxonomy.ToJson());
  Mark(Stage::kMerged, FailedBlocks());
}

UseCaseTaxonomy Checkpoint::LoadTaxonomy() const {
  return UseCaseTaxonomy::FromJson(ReadFile(dir_ / kTaxonomy));
}

void Checkpoint::SaveClassified(std::vector<Classification> const& items) {
  WriteFileAtomic(dir_ / kClassified, ClassificationsJsonl(items));
  Mark(Stage::kClassified, FailedBlocks());
}

std::vector<Classification> Checkpoint::LoadClassified() const {
  return ParseClassificationsJsonl(ReadFile(dir_ / kClassified));
}

}  // namespace soclens::engine
