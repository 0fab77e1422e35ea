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

#ifndef SOCLENS_COMMON_SHA256_H_
#define SOCLENS_COMMON_SHA256_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace soclens {

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(std::filesystem::path const& path);

}  // namespace soclens

#endif  // SOCLENS_COMMON_SHA256_H_
