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

#include <random>

#include <gtest/gtest.h>

#include "soclens/classic/mst.h"
#include "support/oracles.h"

namespace soclens::classic {
namespace {

TEST(MstTest, Triangle) {
  std::vector<double> d = {0, 1, 3, 1, 0, 2, 3, 2, 0};
  auto tree = BuildMst(d, 3);
  ASSERT_EQ(tree.size(), 2u);
  EXPECT_DOUBLE_EQ(TotalWeight(tree), 3.0);
}

TEST(MstTest, SinglePointHasNoEdges) {
  std::vector<double> d = {0};
  EXPECT_TRUE(BuildMst(d, 1).empty());
}

TEST(MstTest, RejectsAsymmetric) {
  std::vector<double> d = {0, 1, 2, 0};
  EXPECT_THROW(BuildMst(d, 2), ValidationError);
  EXPECT_THROW(BuildMst(d, 3), ValidationError);
}

TEST(MstTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  std::uniform_real_distribution<double> w(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = size(rng);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // Integer weights give ties often enough to exercise tie handling.
        d[i * n + j] = d[j * n + i] = trial % 2 ? w(rng) : std::floor(w(rng) / 3);
      }
    }
    auto tree = BuildMst(d, n);
    ASSERT_EQ(tree.size(), n - 1);
    EXPECT_NEAR(TotalWeight(tree), testing::ExhaustiveMstWeight(d, n), 1e-12)
        << "trial " << trial;
    EXPECT_EQ(tree, BuildMst(d, n, Execution::kSerial));
  }
}

}  // namespace
}  // namespace soclens::classic
