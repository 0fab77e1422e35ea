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

#include "soclens/report/svg.h"

#include <algorithm>

namespace soclens::report {
namespace {

constexpr int kLabelWidth = 280;
constexpr int kBarMax = 400;
constexpr int kTop = 60;

std::string Fixed(double v) { return FormatPercent(v, 2); }

}  // namespace

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string BarChartSvg(PercentTable const& table, std::string_view title) {
  auto const rows = static_cast<int>(table.rows.size());
  auto const height = kSvgRowHeight * rows + kSvgMargin;
  double max_pct = 0.0;
  for (auto const& r : table.rows) max_pct = std::max(max_pct, r.percent);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kSvgWidth) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(kSvgWidth) + " " +
         std::to_string(height) + "\" font-family=\"sans-serif\">\n";
  out += "  <text x=\"10\" y=\"25\" font-size=\"16\">" + XmlEscape(title) +
         "</text>\n";
  out += "  <text x=\"10\" y=\"45\" font-size=\"11\">denominator " +
         std::to_string(table.denominator) + " (" +
         std::string(PolicyName(table.policy)) + ")</text>\n";
  for (int i = 0; i < rows; ++i) {
    auto const& r = table.rows[static_cast<std::size_t>(i)];
    auto y = kTop + i * kSvgRowHeight;
    double len = max_pct > 0.0 ? kBarMax * r.percent / max_pct : 0.0;
    auto label = r.label.empty() ? std::string("(blank)") : r.label;
    out += "  <text x=\"" + std::to_string(kLabelWidth - 6) + "\" y=\"" +
           std::to_string(y + 24) +
           "\" font-size=\"12\" text-anchor=\"end\">" + XmlEscape(label) +
           "</text>\n";
    out += "  <rect class=\"bar\" x=\"" + std::to_string(kLabelWidth) +
           "\" y=\"" + std::to_string(y + 8) + "\" width=\"" + Fixed(len) +
           "\" height=\"" + std::to_string(kSvgRowHeight - 16) +
           "\" fill=\"#4c72b0\"/>\n";
    out += "  <text x=\"" + Fixed(kLabelWidth + len + 6) + "\" y=\"" +
           std::to_string(y + 24) + "\" font-size=\"12\">" +
           std::to_string(r.count) + " (" + RenderTable(r.percent) +
           "%)</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace soclens::report
