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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "soclens/classic/pca.h"

namespace soclens::classic {
namespace {

VectorSet FromRows(std::vector<std::vector<double>> const& rows) {
  std::vector<std::string> ids;
  std::vector<double> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ids.push_back("r" + std::to_string(i));
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return VectorSet(rows.front().size(), std::move(ids), std::move(values));
}

VectorSet Random(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(d));
  for (auto& r : rows) {
    for (std::size_t k = 0; k < d; ++k) r[k] = g(rng) * (1.0 + k);
  }
  return FromRows(rows);
}

double Dot(std::span<double const> a, std::span<double const> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TEST(PcaTest, ComponentsAreOrthonormal) {
  auto r = ReduceDims(Random(80, 6, 3), 4);
  ASSERT_EQ(r.kept(), 4u);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      EXPECT_NEAR(Dot(r.component(a), r.component(b)), a == b ? 1.0 : 0.0,
                  1e-8);
    }
  }
  for (std::size_t k = 1; k < 4; ++k) {
    EXPECT_LE(r.explained_variance[k], r.explained_variance[k - 1]);
  }
}

TEST(PcaTest, RankTwoDataReconstructsExactly) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> u = {1, 2, 0, -1, 0.5}, v = {0, 1, 1, 3, -2};
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 50; ++i) {
    double a = g(rng), b = g(rng);
    std::vector<double> row(5);
    for (int k = 0; k < 5; ++k) row[k] = 4.0 + a * u[k] + b * v[k];
    rows.push_back(row);
  }
  auto set = FromRows(rows);
  auto r = ReduceDims(set, 2);
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto back = r.Reconstruct(i);
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_NEAR(back[k], set.row(i)[k], 1e-8);
    }
  }
}

TEST(PcaTest, FullRankKeepsTotalVariance) {
  auto r = ReduceDims(Random(40, 3, 5), 3);
  double sum = 0;
  for (double v : r.explained_variance) sum += v;
  EXPECT_NEAR(sum, r.total_variance, 1e-9);
}

TEST(PcaTest, CollinearDataKeepsOneComponentWithWarning) {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 10; ++i) rows.push_back({1.0 * i, 2.0 * i, -1.0 * i});
  auto r = ReduceDims(FromRows(rows), 2);
  EXPECT_EQ(r.kept(), 1u);
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_EQ(r.projected.dim(), 1u);
}

TEST(PcaTest, SignConventionLargestCoordinatePositive) {
  auto r = ReduceDims(Random(60, 5, 8), 3);
  for (std::size_t k = 0; k < r.kept(); ++k) {
    auto c = r.component(k);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (std::abs(c[i]) > std::abs(c[arg])) arg = i;
    }
    EXPECT_GT(c[arg], 0.0);
  }
}

TEST(PcaTest, Deterministic) {
  auto set = Random(30, 4, 2);
  EXPECT_EQ(ReduceDims(set, 2).projected, ReduceDims(set, 2).projected);
}

TEST(PcaTest, RejectsBadInput) {
  auto set = Random(10, 3, 1);
  EXPECT_THROW(ReduceDims(set, 0), ValidationError);
  EXPECT_THROW(ReduceDims(set, 4), ValidationError);
  EXPECT_THROW(ReduceDims(FromRows({{1, 2}}), 1), ValidationError);
  EXPECT_THROW(ReduceDims(FromRows({{1, 2}, {1, 2}}), 1), ValidationError);
}

}  // namespace
}  // namespace soclens::classic
