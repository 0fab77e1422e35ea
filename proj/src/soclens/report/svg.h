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

#ifndef SOCLENS_REPORT_SVG_H_
#define SOCLENS_REPORT_SVG_H_

#include <string>
#include <string_view>

#include "soclens/report/tables.h"

namespace soclens::report {

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgRowHeight = 40;
inline constexpr int kSvgMargin = 80;

std::string XmlEscape(std::string_view text);

// Horizontal bar chart, 800 x (40 * rows + 80), one <rect class="bar"> per
// row in table order. Bar length is relative to the largest percentage.
std::string BarChartSvg(PercentTable const& table, std::string_view title);

}  // namespace soclens::report

#endif  // SOCLENS_REPORT_SVG_H_
