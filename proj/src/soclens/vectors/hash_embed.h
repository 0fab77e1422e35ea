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

#ifndef SOCLENS_VECTORS_HASH_EMBED_H_
#define SOCLENS_VECTORS_HASH_EMBED_H_

#include <cstddef>
#include <cstdint>

#include "soclens/common/execution.h"
#include "soclens/corpus/corpus.h"
#include "soclens/vectors/vector_set.h"

namespace soclens {

// Deterministic stand-in for a sentence encoder: tokenizes every prompt,
// hashes each token with `seed` to a signed bucket in [0, dim), sums and
// L2-normalizes. The same (prompt, dim, seed) always yields the same bits.
// Throws ValidationError for dim < 2 and ZeroVectorError for a prompt that
// produces no tokens.
VectorSet HashEmbed(corpus::Corpus const& corpus, std::size_t dim,
                    std::uint64_t seed,
                    Execution exec = Execution::kParallel);

}  // namespace soclens

#endif  // SOCLENS_VECTORS_HASH_EMBED_H_
