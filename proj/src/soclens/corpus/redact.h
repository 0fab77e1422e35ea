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

#ifndef SOCLENS_CORPUS_REDACT_H_
#define SOCLENS_CORPUS_REDACT_H_

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "soclens/common/error.h"
#include "soclens/corpus/corpus.h"

namespace soclens::corpus {

// A user-supplied pattern. Matches are replaced by "⟨NAME⟩" with the name
// uppercased.
struct RedactionRule {
  std::string name;
  std::string pattern;  // ECMAScript regex
};

class InvalidPattern : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Replaces email addresses with ⟨EMAIL⟩, IPv4 addresses with ⟨IP⟩ and then
// applies the user rules in order. Only prompts are rewritten.
class Redactor {
 public:
  // Throws InvalidPattern when a user pattern does not compile.
  explicit Redactor(std::vector<RedactionRule> const& user_rules = {});

  std::string Apply(std::string_view text) const;
  Corpus Apply(Corpus const& corpus) const;

  // Parses "NAME=REGEX".
  static RedactionRule ParseRule(std::string_view spec);

 private:
  struct Compiled {
    std::regex re;
    std::string placeholder;
  };
  std::vector<Compiled> rules_;
};

}  // namespace soclens::corpus

#endif  // SOCLENS_CORPUS_REDACT_H_
