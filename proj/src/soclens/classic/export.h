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

#ifndef SOCLENS_CLASSIC_EXPORT_H_
#define SOCLENS_CLASSIC_EXPORT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/classic/ctfidf.h"
#include "soclens/classic/density.h"
#include "soclens/classic/granular.h"

namespace soclens::classic {

// CSV `record_id,topic`, one row per record in corpus order.
std::string AssignmentCsv(TopicAssignment const& assignment);
TopicAssignment ParseAssignmentCsv(std::string_view text);

// JSON array of {topic, frequency, words: [{word, weight}]}.
std::string SummariesJson(std::vector<TopicSummary> const& summaries);
std::vector<TopicSummary> ParseSummariesJson(std::string_view text);

// CSV `topic,group,group_name`, ordered by topic.
std::string GroupingCsv(GranularGrouping const& grouping);
struct GroupingTable {
  std::map<int, int> group_of;
  std::map<int, std::string> names;
};
// Throws ValidationError when a group is given two different names.
GroupingTable ParseGroupingCsv(std::string_view text);

// CSV `topic,frequency`.
std::map<int, std::size_t> ParseFrequencyCsv(std::string_view text);

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_EXPORT_H_
