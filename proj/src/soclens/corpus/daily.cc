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

#include "soclens/corpus/daily.h"

#include <algorithm>

#include "soclens/common/error.h"

namespace soclens::corpus {

DailySeries DailyCounts(Corpus const& corpus) {
  using std::chrono::floor;
  using std::chrono::days;
  if (corpus.empty()) throw EmptyCorpus();
  auto [lo, hi] = std::minmax_element(
      corpus.records().begin(), corpus.records().end(),
      [](auto const& a, auto const& b) { return a.ts < b.ts; });
  DailySeries series;
  series.first_day = floor<days>(lo->ts);
  auto last = floor<days>(hi->ts);
  series.counts.assign((last - series.first_day).count() + 1, 0);
  for (auto const& r : corpus.records()) {
    ++series.counts[(floor<days>(r.ts) - series.first_day).count()];
  }
  series.total = corpus.size();
  return series;
}

std::string DailySeries::ToCsv() const {
  std::string out = "day,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out += FormatDate(first_day + std::chrono::days(i));
    out += ',';
    out += std::to_string(counts[i]);
    out += '\n';
  }
  return out;
}

}  // namespace soclens::corpus
