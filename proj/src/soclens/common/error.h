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

#ifndef SOCLENS_COMMON_ERROR_H_
#define SOCLENS_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace soclens {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data or configuration. The CLI maps these to exit status 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public ValidationError {
 public:
  EmptyCorpus() : ValidationError("corpus contains no valid records") {}
  explicit EmptyCorpus(std::string const& what) : ValidationError(what) {}
};

}  // namespace soclens

#endif  // SOCLENS_COMMON_ERROR_H_
