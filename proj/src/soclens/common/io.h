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

#ifndef SOCLENS_COMMON_IO_H_
#define SOCLENS_COMMON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace soclens {

// Throws IoError when the file cannot be read.
std::string ReadFile(std::filesystem::path const& path);

// Writes via a sibling temporary file and rename. Throws IoError.
void WriteFileAtomic(std::filesystem::path const& path,
                     std::string_view content);

}  // namespace soclens

#endif  // SOCLENS_COMMON_IO_H_
