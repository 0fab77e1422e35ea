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

#include "soclens/engine/prompts.h"

#include "soclens/common/text.h"

namespace soclens::engine {
namespace {

std::string Header(std::string const& tmpl, bool with_format,
                   std::string const& format) {
  if (!with_format || format.empty()) return tmpl;
  return tmpl + "\n" + format;
}

}  // namespace

std::string Substitute(std::string text, std::string_view name,
                       std::string_view value) {
  auto key = "{" + std::string(name) + "}";
  for (auto pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

std::string ExtractionPrompt(PromptTemplates const& t,
                             std::span<corpus::InteractionRecord const> block,
                             std::size_t categories, std::size_t max_chars) {
  auto header = Substitute(t.extraction, "n", std::to_string(block.size()));
  header = Substitute(header, "k", std::to_string(categories));
  auto out = Header(header, t.format_instructions, t.extraction_format);
  out += "\n\n";
  for (std::size_t i = 0; i < block.size(); ++i) {
    out += std::to_string(i + 1) + ". " +
           TruncateCodePoints(FlattenNewlines(block[i].prompt), max_chars) +
           "\n";
  }
  return out;
}

std::string MergePrompt(PromptTemplates const& t,
                        std::vector<std::string> const& candidates,
                        std::size_t k_final) {
  auto header = Substitute(t.merge, "k", std::to_string(k_final));
  auto out = Header(header, t.format_instructions, t.merge_format);
  out += "\n\n";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out += std::to_string(i + 1) + ". " + candidates[i] + "\n";
  }
  return out;
}

std::string ClassificationPrompt(PromptTemplates const& t,
                                 std::vector<std::string> const& taxonomy,
                                 std::string_view question) {
  auto header = Substitute(t.classification, "t",
                           std::to_string(taxonomy.size()));
  auto out = Header(header, t.format_instructions, t.classification_format);
  out += "\n\nUse cases:\n";
  for (std::size_t i = 0; i < taxonomy.size(); ++i) {
    out += std::to_string(i + 1) + ". " + taxonomy[i] + "\n";
  }
  out += "\nQuestion:\n";
  out += question;
  return out;
}

}  // namespace soclens::engine
