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

#ifndef SOCLENS_ENGINE_PROMPTS_H_
#define SOCLENS_ENGINE_PROMPTS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soclens/corpus/corpus.h"

namespace soclens::engine {

// Templates take {n} (records in the block), {k} (labels requested) and {t}
// (taxonomy size) placeholders.
struct PromptTemplates {
  std::string extraction =
      "please review the following collection of {n} requests by a SOC "
      "operator to an AI assistant, and create {k} categories, or use-cases, "
      "each being 1 or 2 words.";
  std::string merge =
      "The following is a list of SOC operator use-cases. Please assess the "
      "full list, and come up with a short list of {k} high level use cases "
      "that best summarize the different types";
  std::string classification =
      "Please classify this question into one of the following {t} use "
      "cases.\n\nOnce classified, also include a sub-case of one or two words "
      "to provide more context";

  // Appends a one-line output format hint to each template.
  bool format_instructions = true;
  std::string extraction_format = "Reply with one category per line.";
  std::string merge_format = "Reply with one use case per line.";
  std::string classification_format =
      "Reply with the use case on the first line and the sub-case on the "
      "second line.";
};

// Replaces every {name} placeholder with `value`.
std::string Substitute(std::string text, std::string_view name,
                       std::string_view value);

// Template header, then the block's prompts as a 1-based numbered list.
// Each prompt has newlines flattened and is cut to `max_chars` code points.
std::string ExtractionPrompt(PromptTemplates const& t,
                             std::span<corpus::InteractionRecord const> block,
                             std::size_t categories, std::size_t max_chars);

std::string MergePrompt(PromptTemplates const& t,
                        std::vector<std::string> const& candidates,
                        std::size_t k_final);

std::string ClassificationPrompt(PromptTemplates const& t,
                                 std::vector<std::string> const& taxonomy,
                                 std::string_view question);

}  // namespace soclens::engine

#endif  // SOCLENS_ENGINE_PROMPTS_H_
