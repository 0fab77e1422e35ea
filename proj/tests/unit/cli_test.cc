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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "soclens/cli/cli.h"
#include "soclens/common/io.h"

namespace soclens::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "soclens");
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path TempDir(std::string const& name) {
  auto dir = fs::temp_directory_path() / ("soclens_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(ParseArgsTest, ConfigFileMatchesFlags) {
  auto dir = TempDir("config");
  std::ofstream(dir / "run.toml") << "# settings\n"
                                     "[pipeline]\n"
                                     "block_size = 50\n"
                                     "categories_per_block = 8\n"
                                     "k_final = 10\n"
                                     "concurrency = 2\n"
                                     "[report]\n"
                                     "policy = \"all_records\"\n"
                                     "top_k = 3\n";
  auto from_file = ParseArgs({"soclens", "model-llm", "--input", "x.jsonl",
                              "--config", (dir / "run.toml").string()});
  auto from_flags = ParseArgs(
      {"soclens", "model-llm", "--input", "x.jsonl", "--block-size", "50",
       "--categories-per-block", "8", "--taxonomy-size", "10", "--concurrency", "2",
       "--policy", "all_records", "--top-k", "3"});
  EXPECT_EQ(from_file.pipeline.block_size, 50u);
  EXPECT_EQ(from_file.pipeline.block_size, from_flags.pipeline.block_size);
  EXPECT_EQ(from_file.pipeline.categories_per_block,
            from_flags.pipeline.categories_per_block);
  EXPECT_EQ(from_file.pipeline.k_final, from_flags.pipeline.k_final);
  EXPECT_EQ(from_file.pipeline.concurrency, from_flags.pipeline.concurrency);
  EXPECT_EQ(from_file.policy, from_flags.policy);
  EXPECT_EQ(from_file.top_k, from_flags.top_k);

  // Flags win over the file.
  auto mixed = ParseArgs({"soclens", "model-llm", "--input", "x.jsonl",
                          "--config", (dir / "run.toml").string(),
                          "--block-size", "70"});
  EXPECT_EQ(mixed.pipeline.block_size, 70u);
  fs::remove_all(dir);
}

TEST(ParseArgsTest, UnknownConfigKeyRejected) {
  auto dir = TempDir("badconfig");
  std::ofstream(dir / "run.toml") << "blok_size = 50\n";
  EXPECT_THROW(ParseArgs({"soclens", "stats", "--config",
                          (dir / "run.toml").string()}),
               ValidationError);
  fs::remove_all(dir);
}

TEST(ParseArgsTest, Defaults) {
  auto cfg = ParseArgs({"soclens", "stats", "--input", "x.jsonl"});
  EXPECT_EQ(cfg.command, "stats");
  EXPECT_EQ(cfg.pipeline.block_size, 100u);
  EXPECT_EQ(cfg.pipeline.categories_per_block, 12u);
  EXPECT_EQ(cfg.pipeline.k_final, 20u);
  EXPECT_EQ(cfg.cluster.min_cluster_size, 10u);
  EXPECT_EQ(cfg.cluster.target_dim, 5u);
  EXPECT_EQ(cfg.cluster.granular_k, 6u);
}

TEST(ParseArgsTest, UsageErrors) {
  EXPECT_THROW(ParseArgs({"soclens"}), ValidationError);
  EXPECT_THROW(ParseArgs({"soclens", "frobnicate"}), ValidationError);
  EXPECT_THROW(ParseArgs({"soclens", "stats", "--block-size", "abc"}),
               ValidationError);
}

TEST(RunTest, ExitCodes) {
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(RunCli({"stats", "--input", "/nonexistent/x.jsonl"}).code,
            kExitValidation);
}

class SynthCliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = TempDir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    auto r = RunCli({"synth", "--records", "120", "--seed", "5", "--out-dir",
                     (dir_ / "fx").string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(SynthCliTest, StatsWritesDailyCounts) {
  auto r = RunCli({"stats", "--input", (dir_ / "fx" / "corpus.jsonl").string(),
                   "--out-dir", (dir_ / "stats").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "stats" / "daily_counts.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "stats" / "manifest.json"));
}

TEST_F(SynthCliTest, ModelLlmWritesOutputsAndManifest) {
  auto out = dir_ / "llm";
  auto r = RunCli({"model-llm", "--input", (dir_ / "fx" / "corpus.jsonl").string(),
                   "--backend", "replay", "--script",
                   (dir_ / "fx" / "script.jsonl").string(), "--strict-script",
                   "--out-dir", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadFile(out / "classifications.jsonl"),
            ReadFile(dir_ / "fx" / "expected_classifications.jsonl"));
  EXPECT_EQ(nlohmann::json::parse(ReadFile(out / "taxonomy.json")),
            nlohmann::json::parse(ReadFile(dir_ / "fx" / "expected_taxonomy.json")));
  auto manifest = nlohmann::json::parse(ReadFile(out / "manifest.json"));
  EXPECT_TRUE(manifest.contains("outputs"));
  EXPECT_FALSE(manifest["outputs"].empty());
  EXPECT_EQ(fs::exists(out / "calls.jsonl"), true);

  // The report subcommand reproduces the use-case table from the output.
  auto rep = RunCli({"report", "--input", (out / "classifications.jsonl").string(),
                     "--out-dir", (dir_ / "rep").string()});
  ASSERT_EQ(rep.code, kExitOk) << rep.err;
  bool found = false;
  for (auto const& e : fs::directory_iterator(dir_ / "rep" / "reports")) {
    found |= e.path().extension() == ".csv";
  }
  EXPECT_TRUE(found);
}

TEST_F(SynthCliTest, StrictLeftoverIsPipelineFailure) {
  // A script entry that no request will use.
  {
    std::ofstream s(dir_ / "fx" / "script.jsonl", std::ios::app);
    s << R"({"match":"deadbeef","content":"x"})" << "\n";
  }
  auto r = RunCli({"model-llm", "--input", (dir_ / "fx" / "corpus.jsonl").string(),
                   "--backend", "replay", "--script",
                   (dir_ / "fx" / "script.jsonl").string(), "--strict-script",
                   "--out-dir", (dir_ / "llm").string()});
  EXPECT_EQ(r.code, kExitPipeline);
  EXPECT_NE(r.err.find("deadbeef"), std::string::npos);
}

TEST_F(SynthCliTest, ModelClassicNeedsVectors) {
  auto input = (dir_ / "fx" / "corpus.jsonl").string();
  EXPECT_EQ(RunCli({"model-classic", "--input", input}).code, kExitValidation);
  auto r = RunCli({"model-classic", "--input", input, "--hash-dim", "64",
                   "--out-dir", (dir_ / "classic").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "classic" / "assignments.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "classic" / "topics.json"));
}

TEST_F(SynthCliTest, HttpBackendWithoutKeyIsValidationError) {
  unsetenv("LLM_API_KEY");
  auto r = RunCli({"model-llm", "--input", (dir_ / "fx" / "corpus.jsonl").string(),
                   "--backend", "http", "--endpoint",
                   "http://127.0.0.1:1/v1/chat/completions", "--out-dir",
                   (dir_ / "llm").string()});
  EXPECT_EQ(r.code, kExitValidation);
}

}  // namespace
}  // namespace soclens::cli
