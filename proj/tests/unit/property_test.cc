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
#include <random>

#include <gtest/gtest.h>

#include "soclens/classic/ctfidf.h"
#include "soclens/classic/density.h"
#include "soclens/classic/granular.h"
#include "soclens/engine/blocks.h"
#include "soclens/report/tables.h"
#include "support/oracles.h"

namespace soclens {
namespace {

constexpr int kCases = 200;

TEST(PropertyTest, PartitionReassembles) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> n_dist(1, 5000), b_dist(1, 400);
  for (int i = 0; i < kCases; ++i) {
    auto n = n_dist(rng), b = b_dist(rng);
    auto blocks = engine::PartitionBlocks(n, b);
    ASSERT_EQ(blocks.size(), (n + b - 1) / b);
    std::size_t next = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      ASSERT_EQ(blocks[k].begin, next);
      ASSERT_GT(blocks[k].size(), 0u);
      if (k + 1 < blocks.size()) {
        ASSERT_EQ(blocks[k].size(), b);
      }
      ASSERT_LE(blocks[k].size(), b);
      next = blocks[k].end;
    }
    ASSERT_EQ(next, n);
  }
}

VectorSet RandomPoints(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> centers(1, 4), per(3, 40);
  std::uniform_real_distribution<double> where(-20, 20), spread(0.05, 2.0);
  std::vector<std::vector<double>> cs;
  for (int c = centers(rng); c > 0; --c) cs.push_back({where(rng), where(rng)});
  auto blobs = testing::MakeBlobs(cs, per(rng), spread(rng), rng());
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < blobs.labels.size(); ++i) {
    ids.push_back("p" + std::to_string(i));
  }
  return VectorSet(2, std::move(ids), std::move(blobs.points));
}

TEST(PropertyTest, OutliersPlusTopicsCoverEveryRecord) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> mcs(2, 15), ms(1, 10);
  std::bernoulli_distribution coin(0.3);
  for (int i = 0; i < kCases; ++i) {
    auto points = RandomPoints(rng);
    classic::ClusterParams p;
    p.min_cluster_size = mcs(rng);
    if (coin(rng)) p.min_samples = ms(rng);
    p.allow_single_cluster = coin(rng);
    auto a = classic::ClusterDensity(points, p, Execution::kSerial);
    std::size_t sum = a.outliers;
    for (auto const& [t, c] : a.topic_frequencies) sum += c;
    ASSERT_EQ(sum, points.size());
    ASSERT_EQ(a.labels.size(), points.size());
    // Topics are numbered 0..k-1 by non-increasing size.
    int expect = 0;
    std::size_t prev = points.size();
    for (auto const& [t, c] : a.topic_frequencies) {
      ASSERT_EQ(t, expect++);
      ASSERT_LE(c, prev);
      prev = c;
    }
  }
}

classic::CtfidfModel RandomModel(std::mt19937_64& rng, std::size_t topics) {
  std::uniform_int_distribution<std::size_t> vocab_size(3, 30);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::size_t> freq(1, 400);
  auto v = vocab_size(rng);
  std::vector<std::string> vocab;
  for (std::size_t w = 0; w < v; ++w) {
    vocab.push_back("w" + std::string(1, char('a' + w / 26)) +
                    std::string(1, char('a' + w % 26)));
  }
  std::vector<double> counts(topics * v);
  for (std::size_t t = 0; t < topics; ++t) {
    for (std::size_t w = 0; w < v; ++w) counts[t * v + w] = count(rng);
    counts[t * v + t % v] += 1;  // every topic has a token
  }
  std::vector<int> ids(topics);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::size_t> freqs(topics);
  for (auto& f : freqs) f = freq(rng);
  return classic::CtfidfModel(ids, vocab, counts, freqs, Execution::kSerial);
}

TEST(PropertyTest, GroupingConservesCounts) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> topics(1, 25);
  for (int i = 0; i < kCases; ++i) {
    auto model = RandomModel(rng, topics(rng));
    std::uniform_int_distribution<std::size_t> k_dist(1, model.topic_count());
    auto k = k_dist(rng);
    auto g = classic::GranularClusters(model, k, Execution::kSerial);
    auto total = std::accumulate(model.frequencies().begin(),
                                 model.frequencies().end(), std::size_t{0});
    ASSERT_EQ(g.group_count(), k);
    ASSERT_EQ(std::accumulate(g.group_counts.begin(), g.group_counts.end(),
                              std::size_t{0}),
              total);
    ASSERT_EQ(g.group_of.size(), model.topic_count());
    auto report = report::GroupedReport(g, report::DenominatorPolicy::kAssignedOnly);
    ASSERT_EQ(report.denominator, total);
  }
}

TEST(PropertyTest, PercentagesSumToHundred) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> rows(1, 20);
  std::uniform_int_distribution<std::size_t> count(0, 5000);
  for (int i = 0; i < kCases; ++i) {
    std::map<std::string, std::size_t> counts;
    for (int r = rows(rng); r > 0; --r) counts["l" + std::to_string(r)] = count(rng);
    counts["l0"] = 1 + count(rng);
    for (auto policy : {report::DenominatorPolicy::kAssignedOnly,
                        report::DenominatorPolicy::kAllRecords}) {
      auto t = report::Percentages(report::FreqTable::FromCounts(counts, policy));
      double exact = 0, shown = 0;
      for (auto const& r : t.rows) {
        exact += r.percent;
        shown += std::stod(report::RenderTable(r.percent));
      }
      ASSERT_NEAR(exact, 100.0, 1e-9);
      ASSERT_NEAR(shown, 100.0, 0.1);
    }
  }
}

TEST(PropertyTest, CtfidfRankingSurvivesDuplication) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> topics(1, 8), m_dist(2, 5);
  for (int i = 0; i < kCases; ++i) {
    auto base = RandomModel(rng, topics(rng));
    auto m = m_dist(rng);
    std::vector<double> scaled;
    for (std::size_t k = 0; k < base.topic_count(); ++k) {
      for (double c : base.counts(k)) scaled.push_back(c * m);
    }
    std::vector<std::size_t> freqs;
    for (auto f : base.frequencies()) freqs.push_back(f * m);
    classic::CtfidfModel dup(base.topics(), base.vocab(), scaled, freqs,
                             Execution::kSerial);
    for (std::size_t k = 0; k < base.topic_count(); ++k) {
      auto a = base.TopWords(k, base.vocab().size());
      auto b = dup.TopWords(k, dup.vocab().size());
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        ASSERT_EQ(a[j].word, b[j].word) << "case " << i << " topic " << k;
        ASSERT_NEAR(b[j].weight, a[j].weight * m, 1e-9 * m * (1 + a[j].weight));
      }
    }
  }
}

}  // namespace
}  // namespace soclens
