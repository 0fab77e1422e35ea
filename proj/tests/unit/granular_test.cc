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

#include <numeric>

#include <gtest/gtest.h>

#include "soclens/classic/granular.h"

namespace soclens::classic {
namespace {

// Topics 0, 2, 4 use vocabulary {aa, bb, cc}; topics 1, 3 use {xx, yy}.
CtfidfModel TwoFamilies() {
  std::vector<std::string> vocab = {"aa", "bb", "cc", "xx", "yy"};
  std::vector<double> counts = {
      5, 1, 0, 0, 0,  //
      0, 0, 0, 4, 1,  //
      4, 2, 1, 0, 0,  //
      0, 0, 0, 1, 3,  //
      3, 0, 2, 0, 0,  //
  };
  return CtfidfModel({0, 1, 2, 3, 4}, vocab, counts, {10, 20, 30, 40, 50});
}

TEST(GranularTest, SeparatesDisjointVocabularies) {
  auto g = GranularClusters(TwoFamilies(), 2);
  ASSERT_EQ(g.group_count(), 2u);
  EXPECT_EQ(g.Members(0), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(g.Members(1), (std::vector<int>{1, 3}));
  EXPECT_EQ(g.group_counts, (std::vector<std::size_t>{90, 60}));
  EXPECT_EQ(g.group_names[1], "xx_yy");
  EXPECT_EQ(g.group_names[0].substr(0, 2), "aa");
}

TEST(GranularTest, KEqualsTopicsIsIdentity) {
  auto model = TwoFamilies();
  auto g = GranularClusters(model, 5);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(g.group_of.at(t), t);
  EXPECT_EQ(g.group_counts, model.frequencies());
}

TEST(GranularTest, CountsConservedForEveryK) {
  auto model = TwoFamilies();
  auto total = std::accumulate(model.frequencies().begin(),
                               model.frequencies().end(), std::size_t{0});
  for (std::size_t k = 1; k <= 5; ++k) {
    auto g = GranularClusters(model, k);
    EXPECT_EQ(g.group_count(), k);
    EXPECT_EQ(std::accumulate(g.group_counts.begin(), g.group_counts.end(),
                              std::size_t{0}),
              total);
    EXPECT_EQ(g, GranularClusters(model, k, Execution::kSerial));
  }
}

TEST(GranularTest, RejectsBadK) {
  auto model = TwoFamilies();
  EXPECT_THROW(GranularClusters(model, 0), ValidationError);
  EXPECT_THROW(GranularClusters(model, 6), ValidationError);
}

TEST(GranularTest, FromTable) {
  auto g = GranularGrouping::FromTable({{0, 1}, {1, 0}, {2, 1}},
                                       {{0, "zero"}, {1, "one"}},
                                       {{0, 5}, {1, 7}, {2, 1}});
  EXPECT_EQ(g.group_counts, (std::vector<std::size_t>{7, 6}));
  EXPECT_EQ(g.group_names, (std::vector<std::string>{"zero", "one"}));
  EXPECT_THROW(GranularGrouping::FromTable({{0, 2}}, {{2, "x"}}, {{0, 1}}),
               ValidationError);
}

}  // namespace
}  // namespace soclens::classic
