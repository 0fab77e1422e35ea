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

#ifndef SOCLENS_CLASSIC_DENSITY_H_
#define SOCLENS_CLASSIC_DENSITY_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soclens/classic/mst.h"
#include "soclens/common/execution.h"
#include "soclens/vectors/vector_set.h"

namespace soclens::classic {

inline constexpr int kOutlier = -1;

struct ClusterParams {
  std::size_t min_cluster_size = 10;
  // Neighbourhood size for core distances, the point itself included.
  // Defaults to min_cluster_size.
  std::optional<std::size_t> min_samples;
  std::size_t target_dim = 5;
  std::size_t granular_k = 6;
  // Lets the root of the condensed tree be selected as the only cluster.
  bool allow_single_cluster = false;
  // Clusters born below this distance are merged upwards. 0 disables.
  double cluster_selection_epsilon = 0.0;

  std::size_t EffectiveMinSamples() const {
    return min_samples.value_or(min_cluster_size);
  }
  // Throws ValidationError on out-of-range values.
  void Validate() const;
};

// One label per record: a topic id >= 0 or kOutlier.
struct TopicAssignment {
  std::vector<std::string> ids;
  std::vector<int> labels;
  std::map<int, std::size_t> topic_frequencies;  // non-outlier topics only
  std::size_t outliers = 0;
  std::vector<std::string> warnings;

  std::size_t size() const { return ids.size(); }
  std::size_t topic_count() const { return topic_frequencies.size(); }

  // Builds the frequency table; throws ValidationError on length mismatch or
  // labels below kOutlier.
  static TopicAssignment FromLabels(std::vector<std::string> ids,
                                    std::vector<int> labels);
};

// Hierarchical density clustering over mutual reachability distances:
// core distances, minimum spanning tree, single-linkage hierarchy, condensed
// tree at min_cluster_size, excess-of-mass selection. Topics are numbered by
// decreasing size (ties: earliest member record first). Fewer than
// min_cluster_size points yields all outliers plus a warning.
TopicAssignment ClusterDensity(VectorSet const& vectors,
                               ClusterParams const& params,
                               Execution exec = Execution::kParallel);

namespace density {

// Merge i of the single-linkage hierarchy creates node n + i.
struct LinkageNode {
  std::size_t left = 0;
  std::size_t right = 0;
  double distance = 0.0;
  std::size_t size = 0;
};

// Builds the hierarchy from an MST over n points by merging edges in
// (weight, a, b) order.
std::vector<LinkageNode> SingleLinkage(std::vector<Edge> mst, std::size_t n);

struct CondensedEdge {
  std::size_t parent = 0;
  std::size_t child = 0;  // < n_points for a point, otherwise a cluster id
  double lambda = 0.0;    // 1 / distance at which child leaves parent
  std::size_t child_size = 0;
};

struct CondensedTree {
  std::size_t n_points = 0;
  std::vector<CondensedEdge> edges;

  std::size_t root() const { return n_points; }
};

CondensedTree CondenseTree(std::span<LinkageNode const> linkage,
                           std::size_t min_cluster_size);

// Excess of mass per cluster id.
std::map<std::size_t, double> Stability(CondensedTree const& tree);

// Flat labels (numbered in cluster-id order, kOutlier for noise) chosen by
// excess of mass, with optional epsilon merging and single-cluster mode.
std::vector<int> SelectClusters(CondensedTree const& tree,
                                bool allow_single_cluster,
                                double cluster_selection_epsilon);

}  // namespace density

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_DENSITY_H_
