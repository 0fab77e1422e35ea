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

#include <chrono>

#include <gtest/gtest.h>

#include "soclens/common/error.h"
#include "soclens/corpus/corpus.h"
#include "soclens/corpus/csv.h"
#include "soclens/corpus/daily.h"
#include "soclens/corpus/redact.h"
#include "soclens/corpus/timestamp.h"

namespace soclens::corpus {
namespace {

using namespace std::chrono;

std::string Line(std::string const& id, std::string const& ts,
                 std::string const& prompt) {
  return R"({"id":")" + id + R"(","ts":")" + ts +
         R"(","operator":"op1","model":"gpt-4","prompt":")" + prompt +
         "\"}\n";
}

TEST(TimestampTest, ParsesOffsetsToUtc) {
  auto a = ParseRfc3339("2023-08-01T10:00:00Z");
  auto b = ParseRfc3339("2023-08-01T12:00:00+02:00");
  auto c = ParseRfc3339("2023-08-01 10:00:00.123456z");
  ASSERT_TRUE(a && b && c);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(*a, *c);
  EXPECT_EQ(FormatRfc3339(*a), "2023-08-01T10:00:00Z");
}

TEST(TimestampTest, RejectsInvalid) {
  EXPECT_FALSE(ParseRfc3339("2023-02-30T00:00:00Z"));
  EXPECT_FALSE(ParseRfc3339("2023-08-01T10:00:00"));
  EXPECT_FALSE(ParseRfc3339("yesterday"));
}

TEST(CorpusTest, JsonlRoundTrip) {
  auto text = Line("a", "2023-08-01T00:00:00Z", "hello") +
              Line("b", "2023-08-02T00:00:00Z", "world");
  auto r = ParseCorpus(text, Format::kJsonl);
  ASSERT_EQ(r.corpus.size(), 2u);
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.corpus[1].prompt, "world");
  auto again = ParseCorpus(SerializeCorpus(r.corpus, Format::kJsonl),
                           Format::kJsonl);
  EXPECT_EQ(again.corpus, r.corpus);
  auto csv = ParseCorpus(SerializeCorpus(r.corpus, Format::kCsv), Format::kCsv);
  EXPECT_EQ(csv.corpus, r.corpus);
}

TEST(CorpusTest, BadLinesReportedPerLine) {
  auto text = Line("a", "2023-08-01T00:00:00Z", "ok") + "not json\n" +
              Line("b", "nonsense", "bad ts") +
              R"({"id":"c","ts":"2023-08-01T00:00:00Z","operator":"o","model":"m","prompt":"p","extra":1})" +
              "\n" + Line("a", "2023-08-03T00:00:00Z", "dup");
  auto r = ParseCorpus(text, Format::kJsonl);
  ASSERT_EQ(r.corpus.size(), 1u);
  ASSERT_EQ(r.errors.size(), 4u);
  EXPECT_EQ(r.errors[0].line, 2u);
  EXPECT_EQ(r.errors[1].line, 3u);
  EXPECT_EQ(r.errors[2].line, 4u);
  EXPECT_EQ(r.errors[3].line, 5u);
  EXPECT_NE(r.errors[3].reason.find("duplicate"), std::string::npos);
  EXPECT_EQ(r.corpus[0].prompt, "ok");  // first occurrence wins
}

TEST(CorpusTest, EmptyCorpusThrows) {
  EXPECT_THROW(ParseCorpus("", Format::kJsonl), EmptyCorpus);
  EXPECT_THROW(ParseCorpus("garbage\n", Format::kJsonl), EmptyCorpus);
}

TEST(CorpusTest, CsvQuotingAndHeader) {
  std::string text =
      "id,ts,operator,model,prompt\r\n"
      "a,2023-08-01T00:00:00Z,op,m,\"say \"\"hi\"\", then\nnewline\"\r\n";
  auto r = ParseCorpus(text, Format::kCsv);
  ASSERT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.corpus[0].prompt, "say \"hi\", then\nnewline");
  EXPECT_THROW(ParseCorpus("id,ts,prompt\n", Format::kCsv), ValidationError);
}

TEST(CsvTest, EscapeOnlyWhenNeeded) {
  EXPECT_EQ(CsvEscape("plain"), "plain");
  EXPECT_EQ(CsvEscape("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvEscape("q\"q"), "\"q\"\"q\"");
}

TEST(RedactTest, MasksEmailAndIpv4) {
  Redactor r;
  EXPECT_EQ(r.Apply("mail bob@example.com from 10.0.0.1 now"),
            "mail \xe2\x9f\xa8" "EMAIL\xe2\x9f\xa9 from \xe2\x9f\xa8IP\xe2\x9f\xa9 now");
  // Version strings and longer dotted runs are left alone.
  EXPECT_EQ(r.Apply("v1.2.3.4.5"), "v1.2.3.4.5");
}

TEST(RedactTest, Idempotent) {
  Redactor r({Redactor::ParseRule("user=jdoe\\w*")});
  auto once = r.Apply("jdoe42 logged in from 192.168.1.20, alice@corp.io");
  EXPECT_EQ(r.Apply(once), once);
  EXPECT_NE(once.find("\xe2\x9f\xa8USER\xe2\x9f\xa9"), std::string::npos);
}

TEST(RedactTest, InvalidRule) {
  EXPECT_THROW(Redactor({Redactor::ParseRule("x=(")}), InvalidPattern);
  EXPECT_THROW(Redactor::ParseRule("novalue"), ValidationError);
}

TEST(DailyTest, ContiguousDaysAndMean) {
  auto text = Line("a", "2023-08-01T23:00:00Z", "x") +
              Line("b", "2023-08-01T23:30:00-02:00", "y") +  // next UTC day
              Line("c", "2023-08-04T00:00:00Z", "z");
  auto series = DailyCounts(ParseCorpus(text, Format::kJsonl).corpus);
  EXPECT_EQ(series.days(), 4u);
  EXPECT_EQ(series.counts, (std::vector<std::size_t>{1, 1, 0, 1}));
  EXPECT_DOUBLE_EQ(series.mean_per_day(), 0.75);
  EXPECT_EQ(series.ToCsv(),
            "day,count\n2023-08-01,1\n2023-08-02,1\n2023-08-03,0\n"
            "2023-08-04,1\n");
}

}  // namespace
}  // namespace soclens::corpus
