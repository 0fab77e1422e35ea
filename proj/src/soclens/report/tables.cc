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

#include "soclens/report/tables.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "soclens/common/error.h"

namespace soclens::report {

std::string_view PolicyName(DenominatorPolicy policy) {
  return policy == DenominatorPolicy::kAllRecords ? "all_records"
                                                  : "assigned_only";
}

DenominatorPolicy ParsePolicy(std::string_view name) {
  if (name == "assigned_only") return DenominatorPolicy::kAssignedOnly;
  if (name == "all_records") return DenominatorPolicy::kAllRecords;
  throw ValidationError("unknown denominator policy '" + std::string(name) +
                        "'");
}

FreqTable FreqTable::FromCounts(std::map<std::string, std::size_t> const& counts,
                                DenominatorPolicy policy) {
  FreqTable t;
  t.policy = policy;
  for (auto const& [label, count] : counts) {
    t.rows.push_back({label, count});
    t.total += count;
  }
  // The map already orders labels, so a stable sort keeps ties lexicographic.
  std::stable_sort(t.rows.begin(), t.rows.end(),
                   [](auto const& a, auto const& b) { return a.count > b.count; });
  return t;
}

FreqTable TopicFrequencyTable(classic::TopicAssignment const& assignment,
                              DenominatorPolicy policy) {
  if (assignment.size() == 0) {
    throw ValidationError("cannot tabulate an empty assignment");
  }
  std::map<std::string, std::size_t> counts;
  for (auto const& [topic, freq] : assignment.topic_frequencies) {
    counts[std::to_string(topic)] = freq;
  }
  if (policy == DenominatorPolicy::kAllRecords && assignment.outliers > 0) {
    counts[std::string(kOutlierRow)] = assignment.outliers;
  }
  return FreqTable::FromCounts(counts, policy);
}

FreqTable ClassificationFrequencyTable(
    std::vector<engine::Classification> const& items,
    DenominatorPolicy policy) {
  if (items.empty()) throw ValidationError("no classifications to tabulate");
  std::map<std::string, std::size_t> counts;
  for (auto const& c : items) {
    if (c.status == engine::ClassificationStatus::kFailed) {
      if (policy == DenominatorPolicy::kAllRecords) ++counts[std::string(kFailedRow)];
    } else {
      ++counts[c.primary];
    }
  }
  return FreqTable::FromCounts(counts, policy);
}

FreqTable Rollup(FreqTable const& table,
                 std::map<std::string, std::string> const& group_of) {
  std::map<std::string, std::size_t> counts;
  for (auto const& row : table.rows) {
    auto it = group_of.find(row.label);
    counts[it == group_of.end() ? row.label : it->second] += row.count;
  }
  return FreqTable::FromCounts(counts, table.policy);
}

PercentTable Percentages(FreqTable const& table) {
  if (table.total == 0) {
    throw ValidationError("percentages need a non-zero denominator");
  }
  PercentTable out;
  out.denominator = table.total;
  out.policy = table.policy;
  for (auto const& r : table.rows) {
    out.rows.push_back({r.label, r.count,
                        100.0 * static_cast<double>(r.count) /
                            static_cast<double>(table.total)});
  }
  return out;
}

std::string FormatPercent(double percent, int decimals, Rounding rounding) {
  if (decimals < 0 || decimals > 10) {
    throw ValidationError("decimals must be within 0..10");
  }
  if (rounding == Rounding::kTruncate) {
    auto scale = std::pow(10.0, decimals);
    // The small nudge keeps exact decimals such as 0.3 from dropping a digit.
    percent = std::trunc(percent * scale + std::copysign(1e-9, percent)) / scale;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, percent,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw ValidationError("percent out of range");
  return std::string(buf, end);
}

PercentTable GroupedReport(classic::GranularGrouping const& grouping,
                           DenominatorPolicy policy, std::size_t outliers) {
  if (grouping.group_count() == 0) {
    throw ValidationError("cannot report an empty grouping");
  }
  std::map<std::string, std::size_t> counts;
  for (std::size_t g = 0; g < grouping.group_count(); ++g) {
    auto name = grouping.group_names[g].empty()
                    ? "group " + std::to_string(g)
                    : grouping.group_names[g];
    if (counts.count(name)) name += " #" + std::to_string(g);
    counts[name] = grouping.group_counts[g];
  }
  if (policy == DenominatorPolicy::kAllRecords && outliers > 0) {
    counts[std::string(kOutlierRow)] = outliers;
  }
  return Percentages(FreqTable::FromCounts(counts, policy));
}

std::vector<std::pair<std::string, FreqTable>> SubcaseReport(
    std::vector<engine::Classification> const& items, std::size_t top_k) {
  auto primaries =
      ClassificationFrequencyTable(items, DenominatorPolicy::kAssignedOnly);
  std::vector<std::pair<std::string, FreqTable>> out;
  for (std::size_t k = 0; k < primaries.rows.size() && k < top_k; ++k) {
    auto const& primary = primaries.rows[k].label;
    std::map<std::string, std::size_t> counts;
    for (auto const& c : items) {
      if (c.status != engine::ClassificationStatus::kFailed &&
          c.primary == primary) {
        ++counts[c.subcase];
      }
    }
    out.emplace_back(primary, FreqTable::FromCounts(
                                  counts, DenominatorPolicy::kAssignedOnly));
  }
  return out;
}

}  // namespace soclens::report
