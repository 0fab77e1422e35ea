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

#ifndef SOCLENS_CLI_COMMANDS_H_
#define SOCLENS_CLI_COMMANDS_H_

#include <iosfwd>

#include "soclens/cli/cli.h"
#include "soclens/cli/manifest.h"

namespace soclens::cli {

// Daily counts CSV and summary statistics.
void RunStats(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
              std::ostream& err);
// Vectors, reduction, density clustering, topic words, granular groups and
// their reports.
void RunModelClassic(RunConfig const& cfg, Manifest& manifest,
                     std::ostream& out, std::ostream& err);
// Extraction, merge and classification through an LLM backend, resumable
// from <out-dir>/checkpoint, plus reports.
void RunModelLlm(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
                 std::ostream& err);
// Tables and charts from saved assignments, topic frequencies or
// classifications.
void RunReport(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
               std::ostream& err);
// Synthetic corpus, replay script and expected classifications.
void RunSynth(RunConfig const& cfg, Manifest& manifest, std::ostream& out,
              std::ostream& err);

}  // namespace soclens::cli

#endif  // SOCLENS_CLI_COMMANDS_H_
