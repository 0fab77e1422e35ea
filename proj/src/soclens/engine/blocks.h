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

#ifndef SOCLENS_ENGINE_BLOCKS_H_
#define SOCLENS_ENGINE_BLOCKS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "soclens/corpus/corpus.h"

namespace soclens::engine {

// Half-open record range [begin, end) of one block.
struct BlockRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(BlockRange const&, BlockRange const&) = default;
};

// Order-preserving chunks of `block_size`; only the last may be shorter.
// Throws EmptyCorpus for n == 0 and ValidationError for block_size == 0.
std::vector<BlockRange> PartitionBlocks(std::size_t n, std::size_t block_size);

std::span<corpus::InteractionRecord const> BlockRecords(
    corpus::Corpus const& corpus, BlockRange range);

}  // namespace soclens::engine

#endif  // SOCLENS_ENGINE_BLOCKS_H_
