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

#include "soclens/engine/blocks.h"

#include <algorithm>

#include "soclens/common/error.h"

namespace soclens::engine {

std::vector<BlockRange> PartitionBlocks(std::size_t n, std::size_t block_size) {
  if (n == 0) throw EmptyCorpus();
  if (block_size == 0) throw ValidationError("block size must be >= 1");
  std::vector<BlockRange> blocks;
  blocks.reserve((n + block_size - 1) / block_size);
  for (std::size_t begin = 0; begin < n; begin += block_size) {
    blocks.push_back({begin, std::min(n, begin + block_size)});
  }
  return blocks;
}

std::span<corpus::InteractionRecord const> BlockRecords(
    corpus::Corpus const& corpus, BlockRange range) {
  if (range.begin > range.end || range.end > corpus.size()) {
    throw ValidationError("block range outside the corpus");
  }
  return std::span(corpus.records()).subspan(range.begin, range.size());
}

}  // namespace soclens::engine
