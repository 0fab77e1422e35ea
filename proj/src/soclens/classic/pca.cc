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

#include "soclens/classic/pca.h"

#include <Eigen/Dense>

#include <cmath>

namespace soclens::classic {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Eigenvalues at or below this fraction of the largest count as zero.
constexpr double kRankTolerance = 1e-12;

}  // namespace

std::vector<double> PcaResult::Reconstruct(std::size_t i) const {
  std::vector<double> out(mean);
  auto coords = projected.row(i);
  for (std::size_t k = 0; k < kept(); ++k) {
    auto c = component(k);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coords[k] * c[j];
  }
  return out;
}

PcaResult ReduceDims(VectorSet const& vectors, std::size_t target_dim) {
  auto const n = vectors.size();
  auto const dim = vectors.dim();
  if (target_dim == 0) throw ValidationError("target_dim must be positive");
  if (target_dim > dim) {
    throw ValidationError("target_dim " + std::to_string(target_dim) +
                          " exceeds input dimension " + std::to_string(dim));
  }
  if (n < 2) throw ValidationError("dimensionality reduction needs >= 2 vectors");

  Eigen::Map<RowMatrix const> data(vectors.values().data(),
                                   static_cast<Eigen::Index>(n),
                                   static_cast<Eigen::Index>(dim));
  Eigen::RowVectorXd mean = data.colwise().mean();
  RowMatrix centered = data.rowwise() - mean;
  Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error("covariance eigendecomposition did not converge");
  }
  // Ascending order from Eigen; walk it backwards.
  auto const& values = solver.eigenvalues();
  auto const& vecs = solver.eigenvectors();
  double largest = values(static_cast<Eigen::Index>(dim) - 1);
  if (!(largest > 0.0)) throw ValidationError("input vectors have no variance");

  PcaResult result{VectorSet(1, {}, {}), {}, {}, {}, cov.trace(), {}};
  std::size_t rank = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (values(static_cast<Eigen::Index>(dim - 1 - k)) > kRankTolerance * largest) {
      ++rank;
    }
  }
  auto kept = std::min(rank, target_dim);
  if (kept < target_dim) {
    result.warnings.push_back("data has rank " + std::to_string(rank) +
                              "; reduced to " + std::to_string(kept) +
                              " dimensions instead of " +
                              std::to_string(target_dim));
  }

  Eigen::MatrixXd basis(dim, kept);
  for (std::size_t k = 0; k < kept; ++k) {
    Eigen::VectorXd v = vecs.col(static_cast<Eigen::Index>(dim - 1 - k));
    Eigen::Index arg = 0;
    for (Eigen::Index j = 1; j < v.size(); ++j) {
      if (std::abs(v(j)) > std::abs(v(arg))) arg = j;
    }
    if (v(arg) < 0) v = -v;
    basis.col(static_cast<Eigen::Index>(k)) = v;
    result.explained_variance.push_back(
        values(static_cast<Eigen::Index>(dim - 1 - k)));
  }

  RowMatrix projected = centered * basis;
  result.mean.assign(mean.data(), mean.data() + dim);
  result.components.resize(kept * dim);
  for (std::size_t k = 0; k < kept; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      result.components[k * dim + j] = basis(static_cast<Eigen::Index>(j),
                                             static_cast<Eigen::Index>(k));
    }
  }
  result.projected =
      VectorSet(kept, vectors.ids(),
                std::vector<double>(projected.data(),
                                    projected.data() + projected.size()),
                false, vectors.source_model());
  return result;
}

}  // namespace soclens::classic
