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

#ifndef SOCLENS_REPORT_TABLES_H_
#define SOCLENS_REPORT_TABLES_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soclens/classic/density.h"
#include "soclens/classic/granular.h"
#include "soclens/engine/pipeline.h"

namespace soclens::report {

// assigned_only leaves outliers and failed records out of the denominator;
// all_records keeps them as their own row so rows still sum to the total.
enum class DenominatorPolicy { kAssignedOnly, kAllRecords };

std::string_view PolicyName(DenominatorPolicy policy);
DenominatorPolicy ParsePolicy(std::string_view name);

// Row labels used for records outside every label under all_records.
inline constexpr std::string_view kOutlierRow = "-1";
inline constexpr std::string_view kFailedRow = "(failed)";

struct FreqRow {
  std::string label;
  std::size_t count = 0;

  friend bool operator==(FreqRow const&, FreqRow const&) = default;
};

struct FreqTable {
  std::vector<FreqRow> rows;  // count descending, then label
  std::size_t total = 0;      // sum of row counts
  DenominatorPolicy policy = DenominatorPolicy::kAssignedOnly;

  // Sorts and totals. Zero counts are kept.
  static FreqTable FromCounts(std::map<std::string, std::size_t> const& counts,
                              DenominatorPolicy policy);

  friend bool operator==(FreqTable const&, FreqTable const&) = default;
};

// Throws ValidationError for an empty assignment.
FreqTable TopicFrequencyTable(classic::TopicAssignment const& assignment,
                              DenominatorPolicy policy);
// Counts primaries. Throws ValidationError for empty input.
FreqTable ClassificationFrequencyTable(
    std::vector<engine::Classification> const& items,
    DenominatorPolicy policy);

// Sums rows by `group_of` (label -> group label). Labels without a group
// keep their own row.
FreqTable Rollup(FreqTable const& table,
                 std::map<std::string, std::string> const& group_of);

struct PercentRow {
  std::string label;
  std::size_t count = 0;
  double percent = 0.0;  // full precision
};

struct PercentTable {
  std::vector<PercentRow> rows;
  std::size_t denominator = 0;
  DenominatorPolicy policy = DenominatorPolicy::kAssignedOnly;
};

// 100 * count / total per row. Throws ValidationError for a zero total.
PercentTable Percentages(FreqTable const& table);

enum class Rounding { kNearest, kTruncate };

// Fixed-point rendering. kNearest is used for two-decimal tables,
// kTruncate for one-decimal summary figures ("13.6" for 13.65...).
std::string FormatPercent(double percent, int decimals,
                          Rounding rounding = Rounding::kNearest);
inline std::string RenderTable(double percent) {
  return FormatPercent(percent, 2, Rounding::kNearest);
}
inline std::string RenderSummary(double percent) {
  return FormatPercent(percent, 1, Rounding::kTruncate);
}

// Group counts named by group name. `outliers` is added as its own row
// under all_records. Throws ValidationError for an empty grouping.
PercentTable GroupedReport(classic::GranularGrouping const& grouping,
                           DenominatorPolicy policy, std::size_t outliers = 0);

// Sub-case counts for the `top_k` most frequent primaries (failed records
// ignored). Empty sub-cases are counted under a blank label.
std::vector<std::pair<std::string, FreqTable>> SubcaseReport(
    std::vector<engine::Classification> const& items, std::size_t top_k);

}  // namespace soclens::report

#endif  // SOCLENS_REPORT_TABLES_H_
