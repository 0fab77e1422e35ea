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

#include "soclens/corpus/redact.h"

#include "soclens/common/error.h"
#include "soclens/common/text.h"

namespace soclens::corpus {
namespace {

constexpr char kEmailPattern[] =
    R"([A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,})";
constexpr char kOctet[] = R"((25[0-5]|2[0-4][0-9]|1[0-9]{2}|[1-9]?[0-9]))";

std::string Ipv4Pattern() {
  std::string octet = kOctet;
  // Not part of a longer dotted number or identifier on either side.
  return R"((^|[^0-9A-Za-z.]))" "(" + octet + R"(\.)" + octet + R"(\.)" +
         octet + R"(\.)" + octet + ")" + R"((?![0-9A-Za-z]|\.[0-9]))";
}

std::string Placeholder(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return "⟨" + upper + "⟩";
}

}  // namespace

Redactor::Redactor(std::vector<RedactionRule> const& user_rules) {
  rules_.push_back({std::regex(kEmailPattern), Placeholder("email")});
  rules_.push_back({std::regex(Ipv4Pattern()), Placeholder("ip")});
  for (auto const& rule : user_rules) {
    if (Trim(rule.name).empty()) {
      throw InvalidPattern("redaction rule needs a name");
    }
    try {
      rules_.push_back({std::regex(rule.pattern), Placeholder(rule.name)});
    } catch (std::regex_error const& e) {
      throw InvalidPattern("invalid redaction pattern for " + rule.name +
                           ": " + e.what());
    }
  }
}

std::string Redactor::Apply(std::string_view text) const {
  std::string out(text);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    auto const& rule = rules_[r];
    // The IPv4 rule captures its leading boundary character in group 1 so it
    // can be put back.
    auto fmt = r == 1 ? "$1" + rule.placeholder : rule.placeholder;
    std::string replaced;
    std::regex_replace(std::back_inserter(replaced), out.begin(), out.end(),
                       rule.re, fmt.c_str());
    out = std::move(replaced);
  }
  return out;
}

Corpus Redactor::Apply(Corpus const& corpus) const {
  auto records = corpus.records();
  for (auto& r : records) r.prompt = Apply(r.prompt);
  return Corpus(std::move(records), corpus.source());
}

RedactionRule Redactor::ParseRule(std::string_view spec) {
  auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw InvalidPattern("redaction rule must look like NAME=REGEX, got '" +
                         std::string(spec) + "'");
  }
  return {std::string(spec.substr(0, eq)), std::string(spec.substr(eq + 1))};
}

}  // namespace soclens::corpus
