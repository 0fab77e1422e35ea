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

#include "soclens/classic/export.h"

#include <charconv>

#include <nlohmann/json.hpp>
#include "soclens/common/error.h"
#include "soclens/corpus/csv.h"

namespace soclens::classic {
namespace {

template <typename T>
T ParseNumber(std::string const& s, std::size_t line, char const* what) {
  T value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ValidationError("line " + std::to_string(line) + ": bad " + what +
                          " '" + s + "'");
  }
  return value;
}

std::vector<corpus::CsvRow> Rows(std::string_view text,
                                 std::vector<std::string> const& header) {
  auto rows = corpus::ParseCsv(text);
  if (rows.empty() || rows.front().fields != header) {
    throw ValidationError("expected CSV header '" + corpus::CsvLine(header) +
                          "'");
  }
  rows.erase(rows.begin());
  for (auto const& r : rows) {
    if (!r.error.empty()) {
      throw ValidationError("line " + std::to_string(r.line) + ": " + r.error);
    }
    if (r.fields.size() != header.size()) {
      throw ValidationError("line " + std::to_string(r.line) +
                            ": wrong field count");
    }
  }
  return rows;
}

}  // namespace

std::string AssignmentCsv(TopicAssignment const& assignment) {
  std::string out = "record_id,topic\n";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out += corpus::CsvLine({assignment.ids[i],
                            std::to_string(assignment.labels[i])});
  }
  return out;
}

TopicAssignment ParseAssignmentCsv(std::string_view text) {
  std::vector<std::string> ids;
  std::vector<int> labels;
  for (auto& r : Rows(text, {"record_id", "topic"})) {
    ids.push_back(std::move(r.fields[0]));
    labels.push_back(ParseNumber<int>(r.fields[1], r.line, "topic"));
  }
  return TopicAssignment::FromLabels(std::move(ids), std::move(labels));
}

std::string SummariesJson(std::vector<TopicSummary> const& summaries) {
  auto arr = nlohmann::ordered_json::array();
  for (auto const& s : summaries) {
    auto words = nlohmann::ordered_json::array();
    for (auto const& w : s.top_words) {
      words.push_back({{"word", w.word}, {"weight", w.weight}});
    }
    arr.push_back(
        {{"topic", s.topic}, {"frequency", s.frequency}, {"words", words}});
  }
  return arr.dump(2) + "\n";
}

std::vector<TopicSummary> ParseSummariesJson(std::string_view text) {
  std::vector<TopicSummary> out;
  try {
    auto arr = nlohmann::json::parse(text);
    for (auto const& item : arr) {
      TopicSummary s;
      s.topic = item.at("topic").get<int>();
      s.frequency = item.at("frequency").get<std::size_t>();
      for (auto const& w : item.at("words")) {
        s.top_words.push_back(
            {w.at("word").get<std::string>(), w.at("weight").get<double>()});
      }
      out.push_back(std::move(s));
    }
  } catch (nlohmann::json::exception const& e) {
    throw ValidationError(std::string("bad topic summary JSON: ") + e.what());
  }
  return out;
}

std::string GroupingCsv(GranularGrouping const& grouping) {
  std::string out = "topic,group,group_name\n";
  for (auto const& [topic, g] : grouping.group_of) {
    out += corpus::CsvLine({std::to_string(topic), std::to_string(g),
                            grouping.group_names[static_cast<std::size_t>(g)]});
  }
  return out;
}

GroupingTable ParseGroupingCsv(std::string_view text) {
  GroupingTable table;
  for (auto const& r : Rows(text, {"topic", "group", "group_name"})) {
    auto topic = ParseNumber<int>(r.fields[0], r.line, "topic");
    auto group = ParseNumber<int>(r.fields[1], r.line, "group");
    if (!table.group_of.emplace(topic, group).second) {
      throw ValidationError("line " + std::to_string(r.line) +
                            ": topic listed twice");
    }
    auto [it, fresh] = table.names.emplace(group, r.fields[2]);
    if (!fresh && it->second != r.fields[2]) {
      throw ValidationError("line " + std::to_string(r.line) + ": group " +
                            r.fields[1] + " has two names");
    }
  }
  return table;
}

std::map<int, std::size_t> ParseFrequencyCsv(std::string_view text) {
  std::map<int, std::size_t> out;
  for (auto const& r : Rows(text, {"topic", "frequency"})) {
    auto topic = ParseNumber<int>(r.fields[0], r.line, "topic");
    if (!out.emplace(topic, ParseNumber<std::size_t>(r.fields[1], r.line,
                                                     "frequency"))
             .second) {
      throw ValidationError("line " + std::to_string(r.line) +
                            ": topic listed twice");
    }
  }
  return out;
}

}  // namespace soclens::classic
