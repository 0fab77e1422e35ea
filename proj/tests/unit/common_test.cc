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

#include <atomic>
#include <stdexcept>

#include <gtest/gtest.h>

#include "soclens/common/parallel.h"
#include "soclens/common/sha256.h"
#include "soclens/common/text.h"

namespace soclens {
namespace {

TEST(TextTest, TrimAndCase) {
  EXPECT_EQ(Trim("  a b \t\n"), "a b");
  EXPECT_EQ(ToLowerAscii("SOC Ops"), "soc ops");
  EXPECT_EQ(TitleCase("threat intel"), "Threat Intel");
  EXPECT_EQ(TitleCase("SOC triage"), "SOC Triage");
}

TEST(TextTest, LabelKeyDropsPunctuationAndSpace) {
  EXPECT_EQ(LabelKey("Command-Line Ops"), "commandlineops");
  EXPECT_EQ(LabelKey(" command line  OPS. "), "commandlineops");
}

TEST(TextTest, TruncateCountsCodePoints) {
  EXPECT_EQ(TruncateCodePoints("abcdef", 3), "abc");
  // Two-byte code points are never split.
  EXPECT_EQ(TruncateCodePoints("\xc3\xa9\xc3\xa9\xc3\xa9", 2),
            "\xc3\xa9\xc3\xa9");
  EXPECT_EQ(TruncateCodePoints("ab", 10), "ab");
}

TEST(TextTest, Utf8Validation) {
  EXPECT_TRUE(IsValidUtf8("plain \xe2\x9f\xa8IP\xe2\x9f\xa9"));
  EXPECT_FALSE(IsValidUtf8("\xc3"));
  EXPECT_FALSE(IsValidUtf8("\xff"));
}

TEST(TextTest, SplitLinesHandlesCrlf) {
  auto lines = SplitLines("a\r\nb\nc\n");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "a");
  EXPECT_EQ(lines[2], "c");
  EXPECT_EQ(FlattenNewlines("a\nb\r\nc"), "a b c");
}

TEST(Sha256Test, KnownDigest) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ParallelTest, EverySlotFilledOnce) {
  std::vector<int> hits(1000, 0);
  ParallelForEach(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(ParallelTest, RethrowsWorkerError) {
  EXPECT_THROW(ParallelForEach(50, 4,
                               [](std::size_t i) {
                                 if (i == 17) throw std::runtime_error("x");
                               }),
               std::runtime_error);
}

}  // namespace
}  // namespace soclens
