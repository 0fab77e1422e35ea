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

#include "soclens/corpus/timestamp.h"

#include <cstdio>

namespace soclens::corpus {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool Digits(int n, int& out) {
    if (pos_ + n > s_.size()) return false;
    int v = 0;
    for (int i = 0; i < n; ++i) {
      char c = s_[pos_ + i];
      if (c < '0' || c > '9') return false;
      v = v * 10 + (c - '0');
    }
    pos_ += n;
    out = v;
    return true;
  }

  bool Char(char expected) {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (c != expected &&
        !(expected >= 'A' && expected <= 'Z' && c == expected - 'A' + 'a')) {
      return false;
    }
    ++pos_;
    return true;
  }

  bool AtEnd() const { return pos_ == s_.size(); }
  char Peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void Skip() { ++pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<Timestamp> ParseRfc3339(std::string_view text) {
  using namespace std::chrono;
  Cursor c(text);
  int y, mo, d, h, mi, s;
  if (!c.Digits(4, y) || !c.Char('-') || !c.Digits(2, mo) || !c.Char('-') ||
      !c.Digits(2, d)) {
    return std::nullopt;
  }
  if (!c.Char('T') && !c.Char(' ')) return std::nullopt;
  if (!c.Digits(2, h) || !c.Char(':') || !c.Digits(2, mi) || !c.Char(':') ||
      !c.Digits(2, s)) {
    return std::nullopt;
  }
  if (c.Peek() == '.') {
    c.Skip();
    int digit;
    if (!c.Digits(1, digit)) return std::nullopt;
    while (c.Peek() >= '0' && c.Peek() <= '9') c.Skip();
  }
  int offset_minutes = 0;
  if (c.Char('Z')) {
    // UTC
  } else if (c.Peek() == '+' || c.Peek() == '-') {
    int sign = c.Peek() == '-' ? -1 : 1;
    c.Skip();
    int oh, om;
    if (!c.Digits(2, oh) || !c.Char(':') || !c.Digits(2, om) || oh > 23 ||
        om > 59) {
      return std::nullopt;
    }
    offset_minutes = sign * (oh * 60 + om);
  } else {
    return std::nullopt;
  }
  if (!c.AtEnd()) return std::nullopt;
  // Leap seconds (60) are accepted and folded into the next minute.
  if (h > 23 || mi > 59 || s > 60) return std::nullopt;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  auto local = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
  return local - minutes{offset_minutes};
}

std::string FormatRfc3339(Timestamp ts) {
  using namespace std::chrono;
  auto day = floor<days>(ts);
  year_month_day ymd{day};
  hh_mm_ss hms{ts - day};
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()),
                static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

std::string FormatDate(std::chrono::sys_days day) {
  std::chrono::year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace soclens::corpus
