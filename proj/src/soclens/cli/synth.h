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

#ifndef SOCLENS_CLI_SYNTH_H_
#define SOCLENS_CLI_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "soclens/corpus/corpus.h"
#include "soclens/engine/pipeline.h"
#include "soclens/llm/replay_backend.h"

namespace soclens::cli {

struct SynthOptions {
  std::size_t records = 250;
  std::uint64_t seed = 0;
  engine::PipelineConfig pipeline;
};

// Synthetic operator log plus a replay script that answers every request
// the pipeline will send for it, and the results the script implies.
struct SynthFixture {
  corpus::Corpus corpus;
  std::vector<llm::ScriptEntry> script;
  std::vector<std::string> taxonomy;  // "Other" last
  std::vector<engine::Classification> expected;
};

// The planted use-case names, extended with "Use Case N" past the built-in
// list.
std::vector<std::string> SynthUseCases(std::size_t k);

// Deterministic in (records, seed, pipeline settings). Replies include
// spelling variants, a sub-case that repeats the primary, and labels outside
// the taxonomy, so every classification status except failed occurs.
SynthFixture MakeSynthFixture(SynthOptions const& options);

}  // namespace soclens::cli

#endif  // SOCLENS_CLI_SYNTH_H_
