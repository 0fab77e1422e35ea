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

#ifndef SOCLENS_VECTORS_VECTOR_SET_H_
#define SOCLENS_VECTORS_VECTOR_SET_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "soclens/common/error.h"
#include "soclens/corpus/corpus.h"
#include "soclens/kernels/kernels.h"

namespace soclens {

class CoverageError : public ValidationError {
 public:
  CoverageError(std::string const& what, std::vector<std::string> missing)
      : ValidationError(what), missing_(std::move(missing)) {}
  std::vector<std::string> const& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroVectorError : public ValidationError {
 public:
  ZeroVectorError(std::string const& what, std::string id)
      : ValidationError(what), id_(std::move(id)) {}
  std::string const& id() const { return id_; }

 private:
  std::string id_;
};

// Dense per-record vectors of a shared dimension, stored row-major at double
// precision in the order of `ids()`.
class VectorSet {
 public:
  // Throws ValidationError when sizes disagree, a component is not finite or
  // an id repeats. When `normalized` is set every row must already have unit
  // norm within 1e-9.
  VectorSet(std::size_t dim, std::vector<std::string> ids,
            std::vector<double> values, bool normalized = false,
            std::string source_model = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool normalized() const { return normalized_; }
  std::string const& source_model() const { return source_model_; }
  std::vector<std::string> const& ids() const { return ids_; }
  std::span<double const> values() const { return values_; }
  std::span<double const> row(std::size_t i) const {
    return std::span<double const>(values_).subspan(i * dim_, dim_);
  }
  std::optional<std::size_t> IndexOf(std::string_view id) const;
  kernels::PointView view() const {
    return {ids_.size(), dim_, values_.data()};
  }

  // Scales every row to unit Euclidean norm. Throws ZeroVectorError naming
  // the first all-zero row. Idempotent.
  VectorSet Normalized() const;

  friend bool operator==(VectorSet const& a, VectorSet const& b) {
    return a.dim_ == b.dim_ && a.ids_ == b.ids_ && a.values_ == b.values_ &&
           a.normalized_ == b.normalized_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> ids_;
  std::vector<double> values_;
  bool normalized_;
  std::string source_model_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct VectorLoadResult {
  VectorSet vectors;
  // Ids present in the file but not in the corpus; they are dropped.
  std::vector<std::string> dropped_ids;
};

// Reads the text vector format:
//
//   dim=<D> [model=<name>]
//   <id>\t<c1>,<c2>,...,<cD>
//
// and returns vectors for every corpus id, in corpus order. Throws
// CoverageError when corpus ids are missing, DimensionMismatch when a line has
// the wrong number of components, ValidationError on any other syntax error.
VectorLoadResult LoadVectors(std::filesystem::path const& path,
                             corpus::Corpus const& corpus,
                             bool normalize = true);
VectorLoadResult ParseVectors(std::string_view text,
                              corpus::Corpus const& corpus,
                              bool normalize = true);

std::string SerializeVectors(VectorSet const& vectors);

// dot(a, b) / (|a| |b|), summed left to right and clamped to [-1, 1].
// Throws ValidationError on a dimension mismatch or a zero vector.
double Cosine(std::span<double const> a, std::span<double const> b);

}  // namespace soclens

#endif  // SOCLENS_VECTORS_VECTOR_SET_H_
