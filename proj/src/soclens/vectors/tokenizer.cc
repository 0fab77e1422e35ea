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

#include "soclens/vectors/tokenizer.h"

#include <algorithm>
#include <array>

namespace soclens {
namespace {

// Small English list; only used when drop_stop_words is set.
constexpr std::array<std::string_view, 48> kStopWords = {
    "about", "an",   "and",   "are",   "as",    "at",   "be",    "but",
    "by",    "can",  "could", "do",    "for",   "from", "has",   "have",
    "how",   "if",   "in",    "into",  "is",    "it",   "its",   "me",
    "my",    "no",   "not",   "of",    "on",    "or",   "our",   "so",
    "that",  "the",  "their", "them",  "there", "this", "to",    "us",
    "was",   "we",   "were",  "what",  "which", "with", "would", "you"};

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

std::size_t CodePoints(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xc0) != 0x80;
  }));
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text,
                                  TokenizerOptions const& options) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (CodePoints(current) >= 2 &&
        !(options.drop_stop_words &&
          std::find(kStopWords.begin(), kStopWords.end(), current) !=
              kStopWords.end())) {
      tokens.push_back(current);
    }
    current.clear();
  };
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (!IsWordByte(c)) {
      flush();
      continue;
    }
    current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                           : ch);
  }
  flush();
  return tokens;
}

}  // namespace soclens
