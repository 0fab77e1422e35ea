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

#ifndef SOCLENS_KERNELS_KERNELS_H_
#define SOCLENS_KERNELS_KERNELS_H_

// Data-parallel numeric kernels. Every kernel exists twice: a plain loop in
// namespace `serial` and an OpenMP version in namespace `omp`. For the same
// input both return bit-identical output; per-element arithmetic is shared
// through the inline helpers below and every reduction is order-fixed.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace soclens::kernels {

// Non-owning row-major view of `rows` points with `cols` coordinates.
struct PointView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double const* data = nullptr;

  std::span<double const> row(std::size_t i) const {
    return {data + i * cols, cols};
  }
};

// Undirected weighted edge with a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;

  friend bool operator==(Edge const&, Edge const&) = default;
};

// Total order used for every tie-break: weight, then smaller endpoint, then
// larger endpoint.
inline bool EdgeLess(Edge const& x, Edge const& y) {
  return std::tie(x.weight, x.a, x.b) < std::tie(y.weight, y.a, y.b);
}

inline double Euclidean(std::span<double const> x, std::span<double const> y) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double d = x[k] - y[k];
    acc += d * d;
  }
  return std::sqrt(acc);
}

// 64-bit FNV-1a over the seed bytes followed by the token bytes, finished
// with the splitmix64 mixer.
inline std::uint64_t TokenHash(std::string_view token, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  for (unsigned char c : token) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

using TokenRows = std::vector<std::vector<std::string>>;

namespace serial {

// n x n matrix of Euclidean distances.
std::vector<double> DistanceMatrix(PointView points);

// Distance from each point to its min_samples-th nearest neighbour, the
// point itself counting as the first (so min_samples = 1 gives 0).
std::vector<double> CoreDistances(PointView points, std::size_t min_samples);

// max(core[a], core[b], d(a, b)) for every pair, as an n x n matrix.
std::vector<double> MutualReachabilityMatrix(PointView points,
                                             std::span<double const> core);

// Minimum spanning tree of the complete graph given by an n x n distance
// matrix, built with Prim's algorithm. Edges come out in insertion order.
std::vector<Edge> MstFromMatrix(std::span<double const> distances,
                                std::size_t n);

// Same, over mutual reachability distances computed on the fly (O(n) memory).
std::vector<Edge> MutualReachabilityMst(PointView points,
                                        std::span<double const> core);

// Signed feature hashing: row i of `out` (n x dim) receives +-1 per token of
// tokens[i] in bucket TokenHash % dim, then is scaled to unit norm. Rows
// without tokens stay zero.
void HashRows(TokenRows const& tokens, std::size_t dim, std::uint64_t seed,
              std::span<double> out);

// out[c][t] = counts[c][t] * ln(1 + avg_class_tokens / term_totals[t]),
// exactly 0 where counts[c][t] == 0.
void CtfidfWeights(std::span<double const> counts, std::size_t classes,
                   std::size_t vocab, std::span<double const> term_totals,
                   double avg_class_tokens, std::span<double> out);

}  // namespace serial

namespace omp {

std::vector<double> DistanceMatrix(PointView points);
std::vector<double> CoreDistances(PointView points, std::size_t min_samples);
std::vector<Edge> MstFromMatrix(std::span<double const> distances,
                                std::size_t n);
std::vector<Edge> MutualReachabilityMst(PointView points,
                                        std::span<double const> core);
void HashRows(TokenRows const& tokens, std::size_t dim, std::uint64_t seed,
              std::span<double> out);
void CtfidfWeights(std::span<double const> counts, std::size_t classes,
                   std::size_t vocab, std::span<double const> term_totals,
                   double avg_class_tokens, std::span<double> out);

}  // namespace omp

}  // namespace soclens::kernels

#endif  // SOCLENS_KERNELS_KERNELS_H_
