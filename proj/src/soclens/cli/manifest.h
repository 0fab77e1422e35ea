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

#ifndef SOCLENS_CLI_MANIFEST_H_
#define SOCLENS_CLI_MANIFEST_H_

#include <filesystem>
#include <string>
#include <vector>

#include "soclens/cli/cli.h"
#include "soclens/report/emit.h"

namespace soclens::cli {

// Record of one run: arguments, resolved configuration, input and output
// digests and warnings. Written as manifest.json in the output directory.
class Manifest {
 public:
  Manifest(RunConfig config, std::vector<std::string> args);

  void AddInput(std::filesystem::path const& path);
  // Hashes the file as it is on disk now.
  void AddOutput(std::filesystem::path const& path);
  void AddTables(std::vector<report::EmittedFile> const& files);
  void AddWarning(std::string warning);

  std::vector<std::string> const& warnings() const { return warnings_; }

  std::string ToJson() const;
  // Writes <out_dir>/manifest.json.
  void Write() const;

 private:
  struct File {
    std::string path;
    std::string sha256;
    std::string policy;  // tables only
    std::size_t denominator = 0;
  };

  RunConfig config_;
  std::vector<std::string> args_;
  std::vector<File> inputs_;
  std::vector<File> outputs_;
  std::vector<std::string> warnings_;
};

}  // namespace soclens::cli

#endif  // SOCLENS_CLI_MANIFEST_H_
