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

#ifndef SOCLENS_CORPUS_DAILY_H_
#define SOCLENS_CORPUS_DAILY_H_

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "soclens/corpus/corpus.h"

namespace soclens::corpus {

// Interactions per UTC day over the contiguous range [first_day, last_day].
// Days without traffic are present with count 0.
struct DailySeries {
  std::chrono::sys_days first_day;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  std::size_t days() const { return counts.size(); }
  std::chrono::sys_days last_day() const {
    return first_day + std::chrono::days(counts.size() - 1);
  }
  // total / days, kept as a ratio until asked for.
  double mean_per_day() const {
    return static_cast<double>(total) / static_cast<double>(counts.size());
  }

  // "day,count" rows with a header.
  std::string ToCsv() const;
};

// Throws EmptyCorpus for an empty corpus.
DailySeries DailyCounts(Corpus const& corpus);

}  // namespace soclens::corpus

#endif  // SOCLENS_CORPUS_DAILY_H_
