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

#include <omp.h>

#include <algorithm>

#include "soclens/kernels/detail.h"
#include "soclens/kernels/kernels.h"

namespace soclens::kernels::omp {
namespace {

using Index = std::ptrdiff_t;

// Prim with both the relaxation sweep and the arg-min over the frontier
// split across threads. The arg-min is taken under the total edge order, so
// the merged winner does not depend on which thread saw it first.
template <typename WeightFn>
std::vector<Edge> Prim(std::size_t n, WeightFn weight) {
  std::vector<Edge> tree;
  if (n < 2) return tree;
  tree.reserve(n - 1);
  std::vector<char> in_tree(n, 0);
  std::vector<detail::Candidate> best(n);
  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    detail::Candidate winner;
    bool have_winner = false;
#pragma omp parallel
    {
      detail::Candidate local;
      bool have_local = false;
#pragma omp for schedule(static) nowait
      for (Index vi = 0; vi < static_cast<Index>(n); ++vi) {
        auto v = static_cast<std::size_t>(vi);
        if (in_tree[v]) continue;
        detail::Candidate c{weight(current, v), current, v};
        if (c.Beats(best[v])) best[v] = c;
        if (!have_local || best[v].Beats(local)) {
          local = best[v];
          have_local = true;
        }
      }
#pragma omp critical(soclens_prim_argmin)
      {
        if (have_local && (!have_winner || local.Beats(winner))) {
          winner = local;
          have_winner = true;
        }
      }
    }
    tree.push_back(winner.AsEdge());
    in_tree[winner.to] = 1;
    current = winner.to;
  }
  return tree;
}

}  // namespace

std::vector<double> DistanceMatrix(PointView points) {
  auto n = static_cast<Index>(points.rows);
  std::vector<double> d(points.rows * points.rows, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      // (x - y)^2 == (y - x)^2 exactly, so the result is symmetric.
      if (i != j) d[i * n + j] = Euclidean(points.row(i), points.row(j));
    }
  }
  return d;
}

std::vector<double> CoreDistances(PointView points, std::size_t min_samples) {
  auto n = points.rows;
  std::vector<double> core(n, 0.0);
  if (n == 0) return core;
  auto k = std::min(std::max<std::size_t>(min_samples, 1), n) - 1;
#pragma omp parallel
  {
    std::vector<double> row(n);
#pragma omp for schedule(dynamic, 16)
    for (Index ii = 0; ii < static_cast<Index>(n); ++ii) {
      auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = i == j ? 0.0 : Euclidean(points.row(i), points.row(j));
      }
      std::nth_element(row.begin(), row.begin() + k, row.end());
      core[i] = row[k];
    }
  }
  return core;
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
  auto n = static_cast<Index>(tokens.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (Index ii = 0; ii < n; ++ii) {
    auto i = static_cast<std::size_t>(ii);
    auto row = out.subspan(i * dim, dim);
    std::fill(row.begin(), row.end(), 0.0);
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
  auto total = static_cast<Index>(classes * vocab);
#pragma omp parallel for schedule(static)
  for (Index idx = 0; idx < total; ++idx) {
    auto t = static_cast<std::size_t>(idx) % vocab;
    out[idx] = detail::CtfidfWeight(counts[idx], term_totals[t],
                                    avg_class_tokens);
  }
}

}  // namespace soclens::kernels::omp
