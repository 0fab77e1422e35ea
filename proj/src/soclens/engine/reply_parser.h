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

#ifndef SOCLENS_ENGINE_REPLY_PARSER_H_
#define SOCLENS_ENGINE_REPLY_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

namespace soclens::engine {

// Labels from a list reply. Accepts numbered items ("1. x", "2) x", "(3) x"),
// bullets ("- x", "* x", "• x") and bare lines. When some lines carry a list
// marker, unmarked lines (preambles, closing remarks) are ignored. Markdown
// emphasis, wrapping quotes and trailing periods are removed, and a
// description after " - " or ": " is dropped. Empty labels are skipped.
std::vector<std::string> ParseCategoryList(std::string_view reply);

// Strips list markers and decoration from one label.
std::string CleanLabel(std::string_view text);

struct ClassificationReply {
  std::string primary;
  std::string subcase;
};

// Reads "Use case: X" / "Sub-case: Y" style fields (also "Primary",
// "Category", "Subcase", "Sub case"). Without field names the first two
// non-empty lines are used, and a single line of the form "X - Y" or "X (Y)"
// is split.
ClassificationReply ParseClassificationReply(std::string_view reply);

}  // namespace soclens::engine

#endif  // SOCLENS_ENGINE_REPLY_PARSER_H_
