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

#ifndef SOCLENS_VECTORS_TOKENIZER_H_
#define SOCLENS_VECTORS_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace soclens {

struct TokenizerOptions {
  bool drop_stop_words = false;
};

// Lowercases ASCII, splits on every character that is not an ASCII letter,
// digit or underscore (non-ASCII UTF-8 sequences are kept inside tokens), and
// drops tokens shorter than two code points. No stemming.
//
//   Tokenize("Run cmd.exe /c REG_DWORD") -> {"run", "cmd", "exe", "reg_dword"}
std::vector<std::string> Tokenize(std::string_view text,
                                  TokenizerOptions const& options = {});

}  // namespace soclens

#endif  // SOCLENS_VECTORS_TOKENIZER_H_
