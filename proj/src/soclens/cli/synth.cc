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

#include "soclens/cli/synth.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>

#include "soclens/common/text.h"
#include "soclens/engine/blocks.h"
#include "soclens/engine/prompts.h"

namespace soclens::cli {
namespace {

constexpr std::array<char const*, 20> kUseCases = {
    "Command Line Operations", "Threat Intelligence", "Log Analysis",
    "Query Writing",           "Malware Analysis",    "Phishing Analysis",
    "Incident Response",       "Vulnerability Triage", "Network Analysis",
    "Script Development",      "Report Writing",      "Email Drafting",
    "Translation",             "Policy Guidance",     "Cloud Security",
    "Identity Management",     "Forensics",           "Detection Engineering",
    "Threat Hunting",          "General Knowledge"};

constexpr std::array<char const*, 20> kOpeners = {
    "explain the following command:",
    "what do we know about the threat actor",
    "summarize these log lines from host",
    "write a KQL query that finds logons from",
    "is this file hash malicious:",
    "is this email a phishing attempt? sender",
    "what are the next steps after containing host",
    "how severe is CVE",
    "why would a workstation talk to port",
    "write a powershell script to collect",
    "draft an incident summary for ticket",
    "write a formal email to the user about ticket",
    "translate this alert text into english:",
    "what does our policy say about",
    "review this AWS security group rule",
    "why is this account locked out:",
    "how do I preserve evidence from disk",
    "write a sigma rule for",
    "hunt for lateral movement involving",
    "what is the difference between"};

constexpr std::array<char const*, 12> kNouns = {
    "svchost",   "mimikatz",  "rundll32", "kerberos", "dns tunnel",
    "vpn login", "registry",  "sharepoint", "okta",   "firewall",
    "powershell", "scheduled task"};

constexpr std::array<char const*, 8> kSubcases = {
    "Explanation", "Lookup",     "Triage",       "Summary",
    "Drafting",    "Comparison", "Verification", "Remediation"};

std::string Reply(std::string const& primary, std::string const& subcase) {
  return "Use case: " + primary + "\nSub-case: " + subcase;
}

}  // namespace

std::vector<std::string> SynthUseCases(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i < kUseCases.size() ? std::string(kUseCases[i])
                                       : "Use Case " + std::to_string(i + 1));
  }
  return out;
}

SynthFixture MakeSynthFixture(SynthOptions const& options) {
  auto const& cfg = options.pipeline;
  cfg.Validate();
  if (options.records == 0) throw ValidationError("synth needs records >= 1");
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  auto names = SynthUseCases(cfg.k_final);

  // Skewed use-case popularity: weight 1 / (rank + 1).
  std::vector<double> weights;
  for (std::size_t i = 0; i < names.size(); ++i) weights.push_back(1.0 / (i + 1));
  std::discrete_distribution<std::size_t> pick_use_case(weights.begin(),
                                                        weights.end());

  using namespace std::chrono;
  auto const start = sys_days{year{2023} / August / 1};
  std::vector<corpus::InteractionRecord> records;
  std::vector<std::size_t> planted;
  for (std::size_t i = 0; i < options.records; ++i) {
    auto u = pick_use_case(rng);
    planted.push_back(u);
    corpus::InteractionRecord r;
    r.id = "rec-" + std::to_string(100000 + i);
    r.ts = start + seconds{uniform(60 * 86400)};
    r.operator_id = "op" + std::to_string(1 + uniform(8));
    r.model = cfg.model;
    r.prompt = std::string(kOpeners[u % kOpeners.size()]) + " " +
               kNouns[uniform(kNouns.size())] + " (case " +
               std::to_string(1000 + i) + ")";
    records.push_back(std::move(r));
  }
  // Records arrive in time order, ids breaking ties.
  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return records[a].ts < records[b].ts;
  });
  std::vector<corpus::InteractionRecord> sorted;
  std::vector<std::size_t> sorted_planted;
  for (auto i : order) {
    sorted.push_back(records[i]);
    sorted_planted.push_back(planted[i]);
  }
  SynthFixture fx{corpus::Corpus(std::move(sorted), "synthetic"), {}, {}, {}};
  planted = std::move(sorted_planted);

  auto request_fp = [&](std::string prompt) {
    llm::ChatRequest req;
    req.model = cfg.model;
    req.temperature = cfg.temperature;
    req.messages.push_back({llm::Role::kUser, std::move(prompt)});
    return llm::Fingerprint(req);
  };

  // Extraction: each block names categories_per_block labels drawn from the
  // planted names, rotating so blocks differ.
  std::vector<std::string> pool;
  auto blocks = engine::PartitionBlocks(fx.corpus.size(), cfg.block_size);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::string reply;
    for (std::size_t j = 0; j < cfg.categories_per_block; ++j) {
      auto idx = (b + j) % names.size();
      auto label = names[idx];
      if (j >= names.size()) label += " " + std::to_string(j / names.size() + 1);
      pool.push_back(label);
      reply += std::to_string(j + 1) + ". " + label + "\n";
    }
    auto prompt = engine::ExtractionPrompt(
        cfg.prompts, engine::BlockRecords(fx.corpus, blocks[b]),
        cfg.categories_per_block, cfg.max_record_chars);
    fx.script.push_back({request_fp(std::move(prompt)), reply});
  }

  std::string merge_reply;
  for (std::size_t i = 0; i < names.size(); ++i) {
    merge_reply += "- " + names[i] + "\n";
  }
  fx.script.push_back(
      {request_fp(engine::MergePrompt(cfg.prompts, pool, cfg.k_final)),
       merge_reply});
  fx.taxonomy = names;
  fx.taxonomy.emplace_back(engine::kOtherLabel);

  for (std::size_t i = 0; i < fx.corpus.size(); ++i) {
    auto const& name = names[planted[i]];
    std::string subcase = kSubcases[uniform(kSubcases.size())];
    engine::Classification c;
    c.id = fx.corpus[i].id;
    c.status = engine::ClassificationStatus::kOk;
    c.primary = name;
    c.subcase = subcase;
    auto roll = uniform(100);
    if (roll < 5) {
      // Sub-case repeats the primary: stored blank.
      c.raw = Reply(name, name);
      c.subcase.clear();
    } else if (roll < 10) {
      // Lowercased and hyphenated spelling still matches.
      auto variant = ToLowerAscii(name);
      std::replace(variant.begin(), variant.end(), ' ', '-');
      c.raw = Reply(variant, subcase);
    } else if (roll < 15) {
      // A label outside the taxonomy.
      c.raw = Reply(name.substr(0, name.find(' ')) + " Stuff", subcase);
      c.primary = std::string(engine::kOtherLabel);
      c.status = engine::ClassificationStatus::kFuzzyMissMappedToOther;
    } else if (roll < 20) {
      c.raw = Reply(std::string(engine::kOtherLabel), subcase);
      c.primary = std::string(engine::kOtherLabel);
    } else {
      c.raw = Reply(name, subcase);
    }
    fx.script.push_back(
        {request_fp(engine::ClassificationPrompt(cfg.prompts, fx.taxonomy,
                                                 fx.corpus[i].prompt)),
         c.raw});
    fx.expected.push_back(std::move(c));
  }
  return fx;
}

}  // namespace soclens::cli
