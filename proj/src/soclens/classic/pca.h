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

#ifndef SOCLENS_CLASSIC_PCA_H_
#define SOCLENS_CLASSIC_PCA_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soclens/vectors/vector_set.h"

namespace soclens::classic {

struct PcaResult {
  VectorSet projected;
  std::vector<double> mean;        // dim
  std::vector<double> components;  // kept x dim, row-major, orthonormal rows
  std::vector<double> explained_variance;  // per component, non-increasing
  double total_variance = 0.0;             // trace of the covariance
  std::vector<std::string> warnings;

  std::size_t kept() const { return explained_variance.size(); }
  std::size_t input_dim() const { return mean.size(); }
  std::span<double const> component(std::size_t k) const {
    return std::span<double const>(components)
        .subspan(k * input_dim(), input_dim());
  }
  // mean + sum_k projected[i][k] * component[k]
  std::vector<double> Reconstruct(std::size_t i) const;
};

// Projects mean-centered vectors onto the top `target_dim` principal
// components of their sample covariance. Each component's largest-magnitude
// coordinate is made positive. When the data has fewer than `target_dim`
// non-degenerate directions the output keeps only those and says so in
// `warnings`. Throws ValidationError for target_dim == 0, target_dim > dim,
// fewer than two vectors, or data with no variance at all.
PcaResult ReduceDims(VectorSet const& vectors, std::size_t target_dim);

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_PCA_H_
