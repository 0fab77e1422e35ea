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

#ifndef SOCLENS_CORPUS_TIMESTAMP_H_
#define SOCLENS_CORPUS_TIMESTAMP_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace soclens::corpus {

using Timestamp = std::chrono::sys_seconds;

// Parses an RFC 3339 date-time ("2023-10-05T14:03:22Z",
// "2023-10-05t14:03:22.125+01:00", ...) and normalizes it to UTC. Fractional
// seconds are truncated. Returns nullopt on any syntax or range error.
std::optional<Timestamp> ParseRfc3339(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string FormatRfc3339(Timestamp ts);

// "YYYY-MM-DD"
std::string FormatDate(std::chrono::sys_days day);

}  // namespace soclens::corpus

#endif  // SOCLENS_CORPUS_TIMESTAMP_H_
