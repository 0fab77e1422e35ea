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

#include "soclens/engine/reply_parser.h"

#include <array>
#include <cctype>
#include <optional>

#include "soclens/common/text.h"

namespace soclens::engine {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Length of a leading list marker, or 0.
std::size_t MarkerLength(std::string_view s) {
  for (std::string_view bullet : {"- ", "* ", "+ ", "\u2022 ", "\u2013 "}) {
    if (s.starts_with(bullet)) return bullet.size();
  }
  std::size_t i = 0;
  bool paren = false;
  if (!s.empty() && s[0] == '(') {
    paren = true;
    i = 1;
  }
  auto digits = i;
  while (i < s.size() && IsDigit(s[i])) ++i;
  if (i == digits || i >= s.size()) return 0;
  if (paren) {
    if (s[i] != ')') return 0;
  } else if (s[i] != '.' && s[i] != ')' && s[i] != ':') {
    return 0;
  }
  ++i;
  if (i < s.size() && s[i] != ' ' && s[i] != '\t') return 0;
  return i;
}

std::string StripDecoration(std::string_view s) {
  std::string out(Trim(s));
  auto erase_all = [&](std::string_view token) {
    for (auto pos = out.find(token); pos != std::string::npos;
         pos = out.find(token)) {
      out.erase(pos, token.size());
    }
  };
  erase_all("**");
  erase_all("__");
  out = std::string(Trim(out));
  for (bool changed = true; changed && out.size() >= 2;) {
    changed = false;
    for (auto [open, close] : std::array<std::pair<std::string_view,
                                                   std::string_view>, 4>{
             {{"\"", "\""}, {"'", "'"}, {"`", "`"}, {"“", "”"}}}) {
      if (out.size() >= open.size() + close.size() && out.starts_with(open) &&
          out.ends_with(close)) {
        out = std::string(Trim(std::string_view(out).substr(
            open.size(), out.size() - open.size() - close.size())));
        changed = true;
      }
    }
  }
  while (!out.empty() && (out.back() == '.' || out.back() == ',' ||
                          out.back() == ';')) {
    out.pop_back();
  }
  return std::string(Trim(out));
}

std::optional<std::string> FieldValue(std::string_view line,
                                      std::initializer_list<std::string_view>
                                          names) {
  auto lower = ToLowerAscii(line);
  for (auto name : names) {
    if (!std::string_view(lower).starts_with(name)) continue;
    auto rest = Trim(line.substr(name.size()));
    if (rest.starts_with(":") || rest.starts_with("-") ||
        rest.starts_with("=")) {
      return std::string(Trim(rest.substr(1)));
    }
  }
  return std::nullopt;
}

}  // namespace

std::string CleanLabel(std::string_view text) {
  auto s = Trim(text);
  s = s.substr(MarkerLength(s));
  auto label = StripDecoration(s);
  for (std::string_view sep : {" - ", ": ", " \u2013 ", " \u2014 "}) {
    if (auto pos = label.find(sep); pos != std::string::npos && pos > 0) {
      label = StripDecoration(std::string_view(label).substr(0, pos));
    }
  }
  if (label.ends_with(":")) label.pop_back();
  return std::string(Trim(label));
}

std::vector<std::string> ParseCategoryList(std::string_view reply) {
  auto lines = SplitLines(reply);
  bool any_marked = false;
  for (auto line : lines) any_marked = any_marked || MarkerLength(Trim(line)) > 0;
  std::vector<std::string> out;
  for (auto line : lines) {
    auto t = Trim(line);
    if (t.empty()) continue;
    if (any_marked && MarkerLength(t) == 0) continue;
    auto label = CleanLabel(t);
    if (!label.empty()) out.push_back(std::move(label));
  }
  return out;
}

ClassificationReply ParseClassificationReply(std::string_view reply) {
  ClassificationReply out;
  std::vector<std::string> bare;
  bool primary_found = false;
  bool subcase_found = false;
  for (auto line : SplitLines(reply)) {
    auto t = Trim(line);
    t = t.substr(MarkerLength(t));
    auto plain = StripDecoration(t);
    if (plain.empty()) continue;
    if (auto v = FieldValue(plain, {"sub-case", "subcase", "sub case",
                                    "sub-category", "subcategory"})) {
      if (!subcase_found) out.subcase = StripDecoration(*v);
      subcase_found = true;
    } else if (auto v = FieldValue(plain, {"use case", "use-case", "primary",
                                           "category", "classification"})) {
      if (!primary_found) out.primary = StripDecoration(*v);
      primary_found = true;
    } else {
      bare.push_back(std::move(plain));
    }
  }
  if (!primary_found && !bare.empty()) {
    out.primary = bare.front();
    bare.erase(bare.begin());
    if (!subcase_found && bare.empty()) {
      // Single line "Primary - sub" or "Primary (sub)".
      for (std::string_view sep : {" - ", " / ", " \u2013 "}) {
        if (auto pos = out.primary.find(sep); pos != std::string::npos) {
          out.subcase = StripDecoration(out.primary.substr(pos + sep.size()));
          out.primary = StripDecoration(out.primary.substr(0, pos));
          subcase_found = true;
          break;
        }
      }
      if (!subcase_found && out.primary.ends_with(")")) {
        if (auto open = out.primary.rfind(" ("); open != std::string::npos) {
          out.subcase = StripDecoration(out.primary.substr(
              open + 2, out.primary.size() - open - 3));
          out.primary = StripDecoration(out.primary.substr(0, open));
          subcase_found = true;
        }
      }
    }
  }
  if (!subcase_found && !bare.empty()) out.subcase = bare.front();
  return out;
}

}  // namespace soclens::engine
