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

#ifndef SOCLENS_KERNELS_DETAIL_H_
#define SOCLENS_KERNELS_DETAIL_H_

#include <algorithm>
#include <cmath>
#include <limits>

#include "soclens/kernels/kernels.h"

namespace soclens::kernels::detail {

// Best known connection of an out-of-tree vertex to the tree.
struct Candidate {
  double weight = std::numeric_limits<double>::infinity();
  std::size_t from = 0;
  std::size_t to = 0;

  Edge AsEdge() const {
    return {std::min(from, to), std::max(from, to), weight};
  }
  bool Beats(Candidate const& other) const {
    return EdgeLess(AsEdge(), other.AsEdge());
  }
};

inline double HashSign(std::uint64_t h) {
  // Bucket uses the low bits via modulo; the sign comes from the top bit of
  // a second mix so the two are not correlated.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return (h >> 63) ? -1.0 : 1.0;
}

inline double CtfidfWeight(double count, double term_total, double avg) {
  if (count == 0.0) return 0.0;
  return count * std::log(1.0 + avg / term_total);
}

}  // namespace soclens::kernels::detail

#endif  // SOCLENS_KERNELS_DETAIL_H_
