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

#ifndef SOCLENS_COMMON_TEXT_H_
#define SOCLENS_COMMON_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace soclens {

std::string_view Trim(std::string_view s);
std::string ToLowerAscii(std::string_view s);

// Uppercases the first ASCII letter of every whitespace-separated word and
// leaves the rest untouched, so acronyms like "SOC" survive.
std::string TitleCase(std::string_view s);

// Comparison key for labels: ASCII-lowercased with every character that is
// not an ASCII letter or digit removed. "Command-Line Ops" -> "commandlineops".
std::string LabelKey(std::string_view s);

bool IsValidUtf8(std::string_view s);

// Keeps at most `max_code_points` UTF-8 code points.
std::string TruncateCodePoints(std::string_view s, std::size_t max_code_points);

// Replaces CR and LF characters with single spaces.
std::string FlattenNewlines(std::string_view s);

std::vector<std::string_view> SplitLines(std::string_view s);

std::string Join(std::vector<std::string> const& parts, std::string_view sep);

}  // namespace soclens

#endif  // SOCLENS_COMMON_TEXT_H_
