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

#include <algorithm>

#include "soclens/kernels/detail.h"
#include "soclens/kernels/kernels.h"

namespace soclens::kernels::serial {
namespace {

template <typename WeightFn>
std::vector<Edge> Prim(std::size_t n, WeightFn weight) {
  std::vector<Edge> tree;
  if (n < 2) return tree;
  tree.reserve(n - 1);
  std::vector<bool> in_tree(n, false);
  std::vector<detail::Candidate> best(n);
  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    detail::Candidate winner;
    bool have_winner = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      detail::Candidate c{weight(current, v), current, v};
      if (c.Beats(best[v])) best[v] = c;
      if (!have_winner || best[v].Beats(winner)) {
        winner = best[v];
        have_winner = true;
      }
    }
    tree.push_back(winner.AsEdge());
    in_tree[winner.to] = true;
    current = winner.to;
  }
  return tree;
}

}  // namespace

std::vector<double> DistanceMatrix(PointView points) {
  auto n = points.rows;
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = Euclidean(points.row(i), points.row(j));
    }
  }
  return d;
}

std::vector<double> CoreDistances(PointView points, std::size_t min_samples) {
  auto n = points.rows;
  std::vector<double> core(n, 0.0);
  if (n == 0) return core;
  auto k = std::min(std::max<std::size_t>(min_samples, 1), n) - 1;
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = i == j ? 0.0 : Euclidean(points.row(i), points.row(j));
    }
    std::nth_element(row.begin(), row.begin() + k, row.end());
    core[i] = row[k];
  }
  return core;
}

std::vector<double> MutualReachabilityMatrix(PointView points,
                                             std::span<double const> core) {
  auto n = points.rows;
  auto d = DistanceMatrix(points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) d[i * n + j] = std::max({core[i], core[j], d[i * n + j]});
    }
  }
  return d;
}

std::vector<Edge> MstFromMatrix(std::span<double const> distances,
                                std::size_t n) {
  return Prim(n, [&](std::size_t u, std::size_t v) {
    return distances[u * n + v];
  });
}

std::vector<Edge> MutualReachabilityMst(PointView points,
                                        std::span<double const> core) {
  return Prim(points.rows, [&](std::size_t u, std::size_t v) {
    return std::max({core[u], core[v], Euclidean(points.row(u), points.row(v))});
  });
}

void HashRows(TokenRows const& tokens, std::size_t dim, std::uint64_t seed,
              std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto row = out.subspan(i * dim, dim);
    for (auto const& tok : tokens[i]) {
      auto h = TokenHash(tok, seed);
      row[h % dim] += detail::HashSign(h);
    }
    double norm2 = 0.0;
    for (double v : row) norm2 += v * v;
    if (norm2 > 0.0) {
      double norm = std::sqrt(norm2);
      for (double& v : row) v /= norm;
    }
  }
}

void CtfidfWeights(std::span<double const> counts, std::size_t classes,
                   std::size_t vocab, std::span<double const> term_totals,
                   double avg_class_tokens, std::span<double> out) {
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t t = 0; t < vocab; ++t) {
      out[c * vocab + t] = detail::CtfidfWeight(counts[c * vocab + t],
                                                term_totals[t],
                                                avg_class_tokens);
    }
  }
}

}  // namespace soclens::kernels::serial
