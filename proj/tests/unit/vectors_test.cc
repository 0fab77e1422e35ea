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

#include <gtest/gtest.h>

#include "soclens/corpus/corpus.h"
#include "soclens/vectors/hash_embed.h"
#include "soclens/vectors/tokenizer.h"
#include "soclens/vectors/vector_set.h"

namespace soclens {
namespace {

corpus::Corpus Small() {
  std::string text;
  for (auto [id, p] : {std::pair{"a", "explain powershell get-process"},
                       std::pair{"b", "write a KQL query"},
                       std::pair{"c", "reg_dword value meaning"}}) {
    text += std::string(R"({"id":")") + id +
            R"(","ts":"2023-08-01T00:00:00Z","operator":"o","model":"m","prompt":")" +
            p + "\"}\n";
  }
  return corpus::ParseCorpus(text, corpus::Format::kJsonl).corpus;
}

TEST(TokenizerTest, LowercasesAndKeepsUnderscore) {
  EXPECT_EQ(Tokenize("Explain REG_DWORD, a x!"),
            (std::vector<std::string>{"explain", "reg_dword"}));
  EXPECT_EQ(Tokenize("the value of it", {.drop_stop_words = true}),
            (std::vector<std::string>{"value"}));
}

TEST(VectorsTest, ParseOrdersByCorpusAndNormalizes) {
  auto c = Small();
  auto r = ParseVectors("dim=2\nc\t0,2\na\t3,4\nb\t1,0\nzz\t1,1\n", c);
  EXPECT_EQ(r.vectors.ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(r.dropped_ids, (std::vector<std::string>{"zz"}));
  EXPECT_NEAR(r.vectors.row(0)[0], 0.6, 1e-15);
  EXPECT_NEAR(r.vectors.row(2)[1], 1.0, 1e-15);
  auto raw = ParseVectors("dim=2\nc\t0,2\na\t3,4\nb\t1,0\n", c, false);
  EXPECT_EQ(raw.vectors.row(0)[1], 4.0);
}

TEST(VectorsTest, MissingIdsRaiseCoverageError) {
  auto c = Small();
  try {
    ParseVectors("dim=2\na\t1,0\n", c);
    FAIL();
  } catch (CoverageError const& e) {
    EXPECT_EQ(e.missing(), (std::vector<std::string>{"b", "c"}));
  }
}

TEST(VectorsTest, DimensionMismatch) {
  EXPECT_THROW(ParseVectors("dim=2\na\t1,0\nb\t1\nc\t0,1\n", Small()),
               DimensionMismatch);
}

TEST(VectorsTest, ZeroVectorCannotNormalize) {
  EXPECT_THROW(ParseVectors("dim=2\na\t1,0\nb\t0,0\nc\t0,1\n", Small()),
               ZeroVectorError);
}

TEST(VectorsTest, SerializeRoundTrip) {
  auto c = Small();
  auto r = ParseVectors("dim=3\na\t0.1,0.2,0.3\nb\t1e-3,2,3\nc\t-1,0,0\n", c,
                        false);
  auto again = ParseVectors(SerializeVectors(r.vectors), c, false);
  EXPECT_EQ(again.vectors, r.vectors);
}

TEST(CosineTest, ClampedAndSymmetric) {
  std::vector<double> a = {1, 2, 3}, b = {2, 4, 6}, n = {-1, -2, -3};
  EXPECT_DOUBLE_EQ(Cosine(a, b), 1.0);
  EXPECT_DOUBLE_EQ(Cosine(a, n), -1.0);
  EXPECT_LE(Cosine(a, b), 1.0);
  std::vector<double> z = {0, 0, 0};
  EXPECT_THROW(Cosine(a, z), ValidationError);
}

TEST(HashEmbedTest, UnitNormDeterministic) {
  auto c = Small();
  auto a = HashEmbed(c, 32, 7);
  auto b = HashEmbed(c, 32, 7, Execution::kSerial);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.normalized());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0;
    for (double x : a.row(i)) s += x * x;
    EXPECT_NEAR(std::sqrt(s), 1.0, 1e-12);
  }
  EXPECT_NE(HashEmbed(c, 32, 8), a);
  EXPECT_THROW(HashEmbed(c, 1, 0), ValidationError);
}

}  // namespace
}  // namespace soclens
