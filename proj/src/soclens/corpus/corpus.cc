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

#include "soclens/corpus/corpus.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>
#include "soclens/common/error.h"
#include "soclens/common/text.h"
#include "soclens/corpus/csv.h"

namespace soclens::corpus {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kFields = {"id", "ts", "operator",
                                                     "model", "prompt"};

// Validates the five raw field values and builds a record, or returns the
// reason the line is rejected.
std::variant<InteractionRecord, std::string> MakeRecord(
    std::string id, std::string const& ts, std::string op, std::string model,
    std::string prompt) {
  if (Trim(id).empty()) return std::string("empty id");
  auto parsed = ParseRfc3339(ts);
  if (!parsed) return "unparseable timestamp '" + ts + "'";
  if (Trim(prompt).empty()) return std::string("empty prompt");
  for (auto const* f : {&id, &op, &model, &prompt}) {
    if (!IsValidUtf8(*f)) return std::string("invalid UTF-8");
  }
  return InteractionRecord{std::move(id), *parsed, std::move(op),
                           std::move(model), std::move(prompt)};
}

std::variant<InteractionRecord, std::string> ParseJsonLine(
    std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (json::parse_error const& e) {
    return std::string("malformed JSON");
  }
  if (!obj.is_object()) return std::string("line is not a JSON object");
  for (auto const& [key, value] : obj.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      return "unexpected field '" + key + "'";
    }
  }
  std::array<std::string, 5> values;
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    auto it = obj.find(std::string(kFields[i]));
    if (it == obj.end()) return "missing field '" + std::string(kFields[i]) + "'";
    if (!it->is_string()) {
      return "field '" + std::string(kFields[i]) + "' is not a string";
    }
    values[i] = it->get<std::string>();
  }
  return MakeRecord(std::move(values[0]), values[1], std::move(values[2]),
                    std::move(values[3]), std::move(values[4]));
}

struct Collector {
  std::vector<InteractionRecord> records;
  std::vector<LineError> errors;
  std::unordered_map<std::string, std::size_t> first_line;

  void Add(std::size_t line,
           std::variant<InteractionRecord, std::string> parsed) {
    if (auto* reason = std::get_if<std::string>(&parsed)) {
      errors.push_back({line, std::move(*reason)});
      return;
    }
    auto& rec = std::get<InteractionRecord>(parsed);
    auto [it, inserted] = first_line.emplace(rec.id, line);
    if (!inserted) {
      errors.push_back({line, "duplicate id '" + rec.id +
                                  "' (first seen on line " +
                                  std::to_string(it->second) + ")"});
      return;
    }
    records.push_back(std::move(rec));
  }
};

}  // namespace

Format ParseFormat(std::string_view name) {
  auto lower = ToLowerAscii(name);
  if (lower == "jsonl") return Format::kJsonl;
  if (lower == "csv") return Format::kCsv;
  throw ValidationError("unknown corpus format '" + std::string(name) +
                        "' (expected jsonl or csv)");
}

Format FormatFromPath(std::filesystem::path const& path) {
  return ToLowerAscii(path.extension().string()) == ".csv" ? Format::kCsv
                                                           : Format::kJsonl;
}

Corpus::Corpus(std::vector<InteractionRecord> records, std::string source)
    : records_(std::move(records)), source_(std::move(source)) {
  index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    auto const& r = records_[i];
    if (Trim(r.id).empty()) throw ValidationError("record with empty id");
    if (Trim(r.prompt).empty()) {
      throw ValidationError("record '" + r.id + "' has an empty prompt");
    }
    if (!index_.emplace(r.id, i).second) {
      throw ValidationError("duplicate record id '" + r.id + "'");
    }
  }
}

std::optional<std::size_t> Corpus::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LoadResult ParseCorpus(std::string_view text, Format format,
                       std::string source) {
  Collector c;
  if (format == Format::kJsonl) {
    auto lines = SplitLines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (Trim(lines[i]).empty()) continue;
      c.Add(i + 1, ParseJsonLine(lines[i]));
    }
  } else {
    auto rows = ParseCsv(text);
    std::size_t first = 0;
    while (first < rows.size() && rows[first].fields.size() == 1 &&
           Trim(rows[first].fields[0]).empty()) {
      ++first;
    }
    if (first < rows.size()) {
      auto const& header = rows[first].fields;
      bool ok = header.size() == kFields.size();
      for (std::size_t i = 0; ok && i < header.size(); ++i) {
        ok = Trim(header[i]) == kFields[i];
      }
      if (!ok) {
        throw ValidationError(
            "CSV header must be exactly id,ts,operator,model,prompt");
      }
    }
    for (std::size_t r = first + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      if (row.fields.size() == 1 && Trim(row.fields[0]).empty()) continue;
      if (!row.error.empty()) {
        c.errors.push_back({row.line, row.error});
        continue;
      }
      if (row.fields.size() != kFields.size()) {
        c.errors.push_back({row.line, "expected 5 fields, found " +
                                          std::to_string(row.fields.size())});
        continue;
      }
      c.Add(row.line,
            MakeRecord(std::move(row.fields[0]), row.fields[1],
                       std::move(row.fields[2]), std::move(row.fields[3]),
                       std::move(row.fields[4])));
    }
  }
  if (c.records.empty()) {
    throw EmptyCorpus("no valid records in " +
                      (source.empty() ? std::string("input") : source));
  }
  return LoadResult{Corpus(std::move(c.records), std::move(source)),
                    std::move(c.errors)};
}

LoadResult LoadCorpus(std::filesystem::path const& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ParseCorpus(buf.str(), format, path.string());
}

std::string SerializeCorpus(Corpus const& corpus, Format format) {
  std::string out;
  if (format == Format::kJsonl) {
    for (auto const& r : corpus.records()) {
      json obj = {{"id", r.id},
                  {"ts", FormatRfc3339(r.ts)},
                  {"operator", r.operator_id},
                  {"model", r.model},
                  {"prompt", r.prompt}};
      out += obj.dump();
      out.push_back('\n');
    }
  } else {
    out += "id,ts,operator,model,prompt\n";
    for (auto const& r : corpus.records()) {
      out += CsvLine({r.id, FormatRfc3339(r.ts), r.operator_id, r.model,
                      r.prompt});
    }
  }
  return out;
}

}  // namespace soclens::corpus
