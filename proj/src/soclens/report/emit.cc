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

#include "soclens/report/emit.h"

#include <nlohmann/json.hpp>
#include "soclens/common/io.h"
#include "soclens/common/sha256.h"
#include "soclens/corpus/csv.h"
#include "soclens/report/svg.h"

namespace soclens::report {

EmitFormat ParseEmitFormat(std::string_view name) {
  if (name == "csv") return EmitFormat::kCsv;
  if (name == "json") return EmitFormat::kJson;
  if (name == "svg") return EmitFormat::kSvg;
  throw ValidationError("unknown report format '" + std::string(name) + "'");
}

std::string_view EmitFormatName(EmitFormat format) {
  switch (format) {
    case EmitFormat::kCsv:
      return "csv";
    case EmitFormat::kJson:
      return "json";
    case EmitFormat::kSvg:
      return "svg";
  }
  return "csv";
}

std::string TableCsv(PercentTable const& table) {
  std::string out = "label,count,percent\n";
  for (auto const& r : table.rows) {
    out += corpus::CsvLine(
        {r.label, std::to_string(r.count), RenderTable(r.percent)});
  }
  return out;
}

std::string TableJson(PercentTable const& table, std::string_view title) {
  nlohmann::ordered_json j;
  j["title"] = std::string(title);
  j["policy"] = std::string(PolicyName(table.policy));
  j["denominator"] = table.denominator;
  j["rows"] = nlohmann::ordered_json::array();
  for (auto const& r : table.rows) {
    nlohmann::ordered_json row;
    row["label"] = r.label;
    row["count"] = r.count;
    row["percent"] = r.percent;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::vector<EmittedFile> Emit(std::vector<NamedTable> const& tables,
                              std::filesystem::path const& out_dir,
                              std::set<EmitFormat> const& formats) {
  std::vector<EmittedFile> out;
  if (formats.empty() || tables.empty()) return out;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string());
  for (auto const& t : tables) {
    for (auto format : formats) {
      std::string content;
      switch (format) {
        case EmitFormat::kCsv:
          content = TableCsv(t.table);
          break;
        case EmitFormat::kJson:
          content = TableJson(t.table, t.title);
          break;
        case EmitFormat::kSvg:
          content = BarChartSvg(t.table, t.title);
          break;
      }
      auto path = out_dir / (t.name + "." + std::string(EmitFormatName(format)));
      WriteFileAtomic(path, content);
      out.push_back({path, Sha256Hex(content), t.name, t.table.policy,
                     t.table.denominator});
    }
  }
  return out;
}

}  // namespace soclens::report
