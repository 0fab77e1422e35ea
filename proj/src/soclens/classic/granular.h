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

#ifndef SOCLENS_CLASSIC_GRANULAR_H_
#define SOCLENS_CLASSIC_GRANULAR_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "soclens/classic/ctfidf.h"
#include "soclens/common/execution.h"

namespace soclens::classic {

struct GranularGrouping {
  std::map<int, int> group_of;             // topic -> group
  std::vector<std::string> group_names;    // indexed by group
  std::vector<std::size_t> group_counts;   // summed member frequencies

  std::size_t group_count() const { return group_names.size(); }
  std::vector<int> Members(int group) const;

  // Assembles a grouping from an explicit topic -> group table and the topic
  // frequencies. Groups must be numbered 0..k-1 with no gaps.
  static GranularGrouping FromTable(
      std::map<int, int> group_of, std::map<int, std::string> names,
      std::map<int, std::size_t> const& topic_frequencies);

  friend bool operator==(GranularGrouping const&,
                         GranularGrouping const&) = default;
};

// Average-linkage agglomeration of the topics' c-TF-IDF weight rows under
// cosine distance until `k` groups remain. Groups are numbered by their
// smallest member topic. Each name is the top five words of the group's
// merged counts, joined with '_'. Throws ValidationError when k is 0 or
// exceeds the topic count.
GranularGrouping GranularClusters(CtfidfModel const& model, std::size_t k,
                                  Execution exec = Execution::kParallel);

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_GRANULAR_H_
