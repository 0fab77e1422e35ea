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

#include "soclens/classic/mst.h"

#include <cmath>

#include "soclens/common/error.h"

namespace soclens::classic {

std::vector<Edge> BuildMst(std::span<double const> distances, std::size_t n,
                           Execution exec) {
  if (distances.size() != n * n) {
    throw ValidationError("distance matrix is not n x n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = distances[i * n + j];
      if (!std::isfinite(d)) throw ValidationError("non-finite distance");
      if (d != distances[j * n + i]) {
        throw ValidationError("distance matrix is not symmetric");
      }
    }
  }
  return exec == Execution::kParallel ? kernels::omp::MstFromMatrix(distances, n)
                                      : kernels::serial::MstFromMatrix(distances, n);
}

std::vector<Edge> BuildMst(VectorSet const& points, Execution exec) {
  std::vector<double> zero_core(points.size(), 0.0);
  // With all core distances zero, mutual reachability is plain distance.
  return exec == Execution::kParallel
             ? kernels::omp::MutualReachabilityMst(points.view(), zero_core)
             : kernels::serial::MutualReachabilityMst(points.view(), zero_core);
}

double TotalWeight(std::span<Edge const> edges) {
  double total = 0.0;
  for (auto const& e : edges) total += e.weight;
  return total;
}

}  // namespace soclens::classic
