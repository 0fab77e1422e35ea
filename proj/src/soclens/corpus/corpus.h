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

#ifndef SOCLENS_CORPUS_CORPUS_H_
#define SOCLENS_CORPUS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "soclens/corpus/timestamp.h"

namespace soclens::corpus {

// One operator message sent through the LLM gateway.
struct InteractionRecord {
  std::string id;
  Timestamp ts;
  std::string operator_id;  // serialized as "operator"
  std::string model;
  std::string prompt;

  friend bool operator==(InteractionRecord const&,
                         InteractionRecord const&) = default;
};

enum class Format { kJsonl, kCsv };

Format ParseFormat(std::string_view name);
// Guesses from the extension: ".csv" is CSV, anything else JSONL.
Format FormatFromPath(std::filesystem::path const& path);

// Immutable, ordered collection of records with unique ids. Safe to share
// read-only across threads once constructed.
class Corpus {
 public:
  // Throws ValidationError on an empty id, a blank prompt or a duplicate id.
  explicit Corpus(std::vector<InteractionRecord> records,
                  std::string source = {});

  std::vector<InteractionRecord> const& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::string const& source() const { return source_; }
  InteractionRecord const& operator[](std::size_t i) const {
    return records_[i];
  }

  std::optional<std::size_t> IndexOf(std::string_view id) const;

  friend bool operator==(Corpus const& a, Corpus const& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<InteractionRecord> records_;
  std::string source_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct LoadResult {
  Corpus corpus;
  // Rejected lines, including duplicate ids (first occurrence wins).
  std::vector<LineError> errors;
};

// Throws IoError when the file cannot be read and EmptyCorpus when no line
// survives validation.
LoadResult LoadCorpus(std::filesystem::path const& path, Format format);
LoadResult ParseCorpus(std::string_view text, Format format,
                       std::string source = {});

std::string SerializeCorpus(Corpus const& corpus, Format format);

}  // namespace soclens::corpus

#endif  // SOCLENS_CORPUS_CORPUS_H_
