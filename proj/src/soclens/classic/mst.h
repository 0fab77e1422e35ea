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

#ifndef SOCLENS_CLASSIC_MST_H_
#define SOCLENS_CLASSIC_MST_H_

#include <cstddef>
#include <span>
#include <vector>

#include "soclens/common/execution.h"
#include "soclens/kernels/kernels.h"
#include "soclens/vectors/vector_set.h"

namespace soclens::classic {

using kernels::Edge;

// Minimum spanning tree (n - 1 edges) of the complete graph described by a
// symmetric n x n distance matrix. Ties are broken by the (weight, smaller
// index, larger index) order, which makes the tree unique. Throws
// ValidationError for a non-square, asymmetric or non-finite matrix.
std::vector<Edge> BuildMst(std::span<double const> distances, std::size_t n,
                           Execution exec = Execution::kParallel);

// Same over Euclidean distances between the vectors.
std::vector<Edge> BuildMst(VectorSet const& points,
                           Execution exec = Execution::kParallel);

double TotalWeight(std::span<Edge const> edges);

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_MST_H_
