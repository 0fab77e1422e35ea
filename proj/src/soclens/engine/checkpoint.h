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

#ifndef SOCLENS_ENGINE_CHECKPOINT_H_
#define SOCLENS_ENGINE_CHECKPOINT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "soclens/engine/pipeline.h"

namespace soclens::engine {

enum class Stage { kNone = 0, kExtracted = 1, kMerged = 2, kClassified = 3 };

// SHA-256 over the corpus and every configuration field that shapes the
// requests. A checkpoint written under another digest is ignored.
std::string PipelineDigest(corpus::Corpus const& corpus,
                           PipelineConfig const& cfg);

// Directory holding pool.jsonl, taxonomy.json, classified.jsonl and the
// stage.json marker. Files are replaced atomically.
class Checkpoint {
 public:
  // Creates the directory if needed. Throws IoError on failure.
  Checkpoint(std::filesystem::path dir, std::string digest);

  // Last completed stage, or kNone when the marker is missing, unreadable or
  // from a different digest.
  Stage stage() const;

  void SavePool(CandidatePool const& pool);
  CandidatePool LoadPool() const;
  void SaveTaxonomy(UseCaseTaxonomy const& taxonomy);
  UseCaseTaxonomy LoadTaxonomy() const;
  void SaveClassified(std::vector<Classification> const& items);
  std::vector<Classification> LoadClassified() const;

 private:
  void Mark(Stage stage, std::vector<std::size_t> const& failed_blocks);
  std::vector<std::size_t> FailedBlocks() const;

  std::filesystem::path dir_;
  std::string digest_;
};

}  // namespace soclens::engine

#endif  // SOCLENS_ENGINE_CHECKPOINT_H_
