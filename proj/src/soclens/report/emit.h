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

#ifndef SOCLENS_REPORT_EMIT_H_
#define SOCLENS_REPORT_EMIT_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/report/tables.h"

namespace soclens::report {

enum class EmitFormat { kCsv, kJson, kSvg };

EmitFormat ParseEmitFormat(std::string_view name);
std::string_view EmitFormatName(EmitFormat format);

struct NamedTable {
  std::string name;   // file stem
  std::string title;  // chart and JSON title
  PercentTable table;
};

struct EmittedFile {
  std::filesystem::path path;
  std::string sha256;
  std::string table;  // NamedTable::name
  DenominatorPolicy policy = DenominatorPolicy::kAssignedOnly;
  std::size_t denominator = 0;
};

// `label,count,percent` with two-decimal percentages.
std::string TableCsv(PercentTable const& table);
// {"title", "policy", "denominator", "rows": [{label, count, percent}]}.
std::string TableJson(PercentTable const& table, std::string_view title);

// Writes <name>.<ext> per table and format, in table order then csv, json,
// svg. Returns one entry per file. Throws IoError on write failures.
std::vector<EmittedFile> Emit(std::vector<NamedTable> const& tables,
                              std::filesystem::path const& out_dir,
                              std::set<EmitFormat> const& formats);

}  // namespace soclens::report

#endif  // SOCLENS_REPORT_EMIT_H_
