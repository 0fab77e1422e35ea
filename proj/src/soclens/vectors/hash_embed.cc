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

#include "soclens/vectors/hash_embed.h"

#include "soclens/vectors/tokenizer.h"

namespace soclens {

VectorSet HashEmbed(corpus::Corpus const& corpus, std::size_t dim,
                    std::uint64_t seed, Execution exec) {
  if (dim < 2) throw ValidationError("hash embedding dim must be >= 2");
  kernels::TokenRows tokens;
  tokens.reserve(corpus.size());
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (auto const& r : corpus.records()) {
    tokens.push_back(Tokenize(r.prompt));
    if (tokens.back().empty()) {
      throw ZeroVectorError(
          "record '" + r.id + "' has no tokens and would embed to zero", r.id);
    }
    ids.push_back(r.id);
  }
  std::vector<double> values(corpus.size() * dim);
  if (exec == Execution::kParallel) {
    kernels::omp::HashRows(tokens, dim, seed, values);
  } else {
    kernels::serial::HashRows(tokens, dim, seed, values);
  }
  // Tokens can cancel out (+1 and -1 in the same bucket).
  for (std::size_t i = 0; i < ids.size(); ++i) {
    bool any = false;
    for (std::size_t k = 0; k < dim && !any; ++k) any = values[i * dim + k] != 0;
    if (!any) {
      throw ZeroVectorError("record '" + ids[i] + "' hashes to a zero vector",
                            ids[i]);
    }
  }
  return VectorSet(dim, std::move(ids), std::move(values), true,
                   "hash-embed(dim=" + std::to_string(dim) +
                       ",seed=" + std::to_string(seed) + ")");
}

}  // namespace soclens
