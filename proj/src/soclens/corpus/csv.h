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

#ifndef SOCLENS_CORPUS_CSV_H_
#define SOCLENS_CORPUS_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace soclens::corpus {

// One RFC 4180 record together with the 1-based physical line it starts on.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
  // Set when the record is syntactically broken (e.g. a stray quote inside
  // an unquoted field or an unterminated quoted field).
  std::string error;
};

// Splits RFC 4180 text into records. Accepts LF or CRLF line breaks; quoted
// fields may contain separators, doubled quotes and line breaks.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Quotes the field when it contains a comma, quote, CR or LF.
std::string CsvEscape(std::string_view field);

std::string CsvLine(std::vector<std::string> const& fields);

}  // namespace soclens::corpus

#endif  // SOCLENS_CORPUS_CSV_H_
