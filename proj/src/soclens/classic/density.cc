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

#include "soclens/classic/density.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "soclens/common/error.h"

namespace soclens::classic {
namespace density {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Level-order listing of the subtree under `node` (left before right), the
// same order the condensed tree is built in.
std::vector<std::size_t> Bfs(std::span<LinkageNode const> linkage,
                             std::size_t n, std::size_t node) {
  std::vector<std::size_t> order{node};
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto x = order[i];
    if (x >= n) {
      order.push_back(linkage[x - n].left);
      order.push_back(linkage[x - n].right);
    }
  }
  return order;
}

// (lambda - birth) with equal values contributing zero, so two infinite
// lambdas (duplicate points) do not produce NaN.
double LambdaGap(double lambda, double birth) {
  return lambda == birth ? 0.0 : lambda - birth;
}

struct ClusterIndex {
  std::map<std::size_t, double> birth;                 // cluster -> lambda
  std::map<std::size_t, std::size_t> parent;           // cluster -> parent
  std::map<std::size_t, std::vector<std::size_t>> children;  // clusters only

  explicit ClusterIndex(CondensedTree const& tree) {
    birth[tree.root()] = 0.0;
    for (auto const& e : tree.edges) {
      if (e.child_size <= 1) continue;
      birth[e.child] = e.lambda;
      parent[e.child] = e.parent;
      children[e.parent].push_back(e.child);
    }
  }

  std::vector<std::size_t> Descendants(std::size_t node) const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      auto it = children.find(x);
      if (it == children.end()) continue;
      for (auto c : it->second) {
        out.push_back(c);
        stack.push_back(c);
      }
    }
    return out;
  }
};

std::size_t TraverseUpwards(ClusterIndex const& idx, std::size_t root,
                            double epsilon, std::size_t leaf,
                            bool allow_single_cluster) {
  auto parent = idx.parent.at(leaf);
  if (parent == root) return allow_single_cluster ? parent : leaf;
  double parent_eps = 1.0 / idx.birth.at(parent);
  if (parent_eps > epsilon) return parent;
  return TraverseUpwards(idx, root, epsilon, parent, allow_single_cluster);
}

std::set<std::size_t> EpsilonSearch(std::set<std::size_t> const& leaves,
                                    ClusterIndex const& idx, std::size_t root,
                                    double epsilon, bool allow_single_cluster) {
  std::set<std::size_t> selected;
  std::set<std::size_t> processed;
  for (auto leaf : leaves) {
    double eps = 1.0 / idx.birth.at(leaf);
    if (eps < epsilon) {
      if (processed.count(leaf)) continue;
      auto chosen =
          TraverseUpwards(idx, root, epsilon, leaf, allow_single_cluster);
      selected.insert(chosen);
      for (auto d : idx.Descendants(chosen)) processed.insert(d);
    } else {
      selected.insert(leaf);
    }
  }
  return selected;
}

}  // namespace

std::vector<LinkageNode> SingleLinkage(std::vector<Edge> mst, std::size_t n) {
  if (n == 0 || mst.size() != n - 1) {
    throw ValidationError("single linkage needs a spanning tree of n - 1 edges");
  }
  std::sort(mst.begin(), mst.end(), kernels::EdgeLess);
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::size_t> size(2 * n - 1, 1);
  auto find = [&](std::size_t x) {
    auto root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) x = std::exchange(parent[x], root);
    return root;
  };
  std::vector<LinkageNode> linkage;
  linkage.reserve(n - 1);
  for (std::size_t i = 0; i < mst.size(); ++i) {
    auto left = find(mst[i].a);
    auto right = find(mst[i].b);
    if (left == right) throw ValidationError("edge list contains a cycle");
    auto merged = n + i;
    parent[left] = parent[right] = merged;
    size[merged] = size[left] + size[right];
    linkage.push_back({left, right, mst[i].weight, size[merged]});
  }
  return linkage;
}

CondensedTree CondenseTree(std::span<LinkageNode const> linkage,
                           std::size_t min_cluster_size) {
  auto const n = linkage.size() + 1;
  CondensedTree tree;
  tree.n_points = n;
  if (n < 2) return tree;
  auto const root = 2 * n - 2;
  std::vector<std::size_t> relabel(root + 1, 0);
  std::vector<bool> ignore(root + 1, false);
  relabel[root] = n;
  auto next_label = n + 1;

  auto size_of = [&](std::size_t node) {
    return node >= n ? linkage[node - n].size : std::size_t{1};
  };
  auto fall_out = [&](std::size_t parent_label, std::size_t subtree,
                      double lambda) {
    for (auto sub : Bfs(linkage, n, subtree)) {
      if (sub < n) tree.edges.push_back({parent_label, sub, lambda, 1});
      ignore[sub] = true;
    }
  };

  for (auto node : Bfs(linkage, n, root)) {
    if (ignore[node] || node < n) continue;
    auto const& link = linkage[node - n];
    double lambda = link.distance > 0.0 ? 1.0 / link.distance : kInf;
    auto left_count = size_of(link.left);
    auto right_count = size_of(link.right);
    auto label = relabel[node];
    bool left_big = left_count >= min_cluster_size;
    bool right_big = right_count >= min_cluster_size;
    if (left_big && right_big) {
      relabel[link.left] = next_label++;
      tree.edges.push_back({label, relabel[link.left], lambda, left_count});
      relabel[link.right] = next_label++;
      tree.edges.push_back({label, relabel[link.right], lambda, right_count});
    } else if (!left_big && !right_big) {
      fall_out(label, link.left, lambda);
      fall_out(label, link.right, lambda);
    } else if (!left_big) {
      relabel[link.right] = label;
      fall_out(label, link.left, lambda);
    } else {
      relabel[link.left] = label;
      fall_out(label, link.right, lambda);
    }
  }
  return tree;
}

std::map<std::size_t, double> Stability(CondensedTree const& tree) {
  std::map<std::size_t, double> stability;
  if (tree.edges.empty()) return stability;
  std::map<std::size_t, double> birth;
  for (auto const& e : tree.edges) birth[e.child] = e.lambda;
  birth[tree.root()] = 0.0;
  auto max_parent = tree.root();
  for (auto const& e : tree.edges) max_parent = std::max(max_parent, e.parent);
  for (auto c = tree.root(); c <= max_parent; ++c) stability[c] = 0.0;
  for (auto const& e : tree.edges) {
    stability[e.parent] +=
        LambdaGap(e.lambda, birth[e.parent]) * static_cast<double>(e.child_size);
  }
  return stability;
}

std::vector<int> SelectClusters(CondensedTree const& tree,
                                bool allow_single_cluster,
                                double cluster_selection_epsilon) {
  auto const n = tree.n_points;
  std::vector<int> labels(n, kOutlier);
  if (tree.edges.empty()) return labels;
  auto const root = tree.root();
  auto stability = Stability(tree);
  ClusterIndex idx(tree);

  // Children always have larger ids than their parents, so descending id
  // order visits every cluster after all of its descendants.
  std::vector<std::size_t> node_list;
  for (auto it = stability.rbegin(); it != stability.rend(); ++it) {
    if (it->first != root || allow_single_cluster) node_list.push_back(it->first);
  }
  std::map<std::size_t, bool> is_cluster;
  for (auto c : node_list) is_cluster[c] = true;

  for (auto node : node_list) {
    double subtree = 0.0;
    if (auto it = idx.children.find(node); it != idx.children.end()) {
      for (auto child : it->second) subtree += stability[child];
    }
    if (subtree > stability[node]) {
      is_cluster[node] = false;
      stability[node] = subtree;
    } else {
      for (auto d : idx.Descendants(node)) is_cluster[d] = false;
    }
  }

  std::set<std::size_t> selected;
  for (auto const& [c, on] : is_cluster) {
    if (on) selected.insert(c);
  }
  if (cluster_selection_epsilon != 0.0 && !idx.parent.empty()) {
    if (selected.size() == 1 && *selected.begin() == root) {
      if (!allow_single_cluster) selected.clear();
    } else {
      selected = EpsilonSearch(selected, idx, root, cluster_selection_epsilon,
                               allow_single_cluster);
    }
  }

  std::map<std::size_t, int> label_of;
  for (auto c : selected) label_of.emplace(c, static_cast<int>(label_of.size()));

  std::vector<std::size_t> point_parent(n, root);
  std::vector<double> point_lambda(n, 0.0);
  double root_max_lambda = 0.0;
  for (auto const& e : tree.edges) {
    if (e.child < n) {
      point_parent[e.child] = e.parent;
      point_lambda[e.child] = e.lambda;
    }
    if (e.parent == root) root_max_lambda = std::max(root_max_lambda, e.lambda);
  }
  for (std::size_t p = 0; p < n; ++p) {
    // Climb until a selected cluster or the root.
    auto c = point_parent[p];
    while (c != root && !selected.count(c)) c = idx.parent.at(c);
    if (c != root) {
      labels[p] = label_of.at(c);
    } else if (selected.size() == 1 && selected.count(root) &&
               allow_single_cluster) {
      double threshold = cluster_selection_epsilon != 0.0
                             ? 1.0 / cluster_selection_epsilon
                             : root_max_lambda;
      if (point_lambda[p] >= threshold) labels[p] = label_of.at(root);
    }
  }
  return labels;
}

}  // namespace density

void ClusterParams::Validate() const {
  if (min_cluster_size < 2) {
    throw ValidationError("min_cluster_size must be >= 2");
  }
  if (min_samples && *min_samples < 1) {
    throw ValidationError("min_samples must be >= 1");
  }
  if (target_dim < 1) throw ValidationError("target_dim must be >= 1");
  if (granular_k < 1) throw ValidationError("granular_k must be >= 1");
  if (!(cluster_selection_epsilon >= 0.0) ||
      !std::isfinite(cluster_selection_epsilon)) {
    throw ValidationError("cluster_selection_epsilon must be finite and >= 0");
  }
}

TopicAssignment TopicAssignment::FromLabels(std::vector<std::string> ids,
                                            std::vector<int> labels) {
  if (ids.size() != labels.size()) {
    throw ValidationError("assignment ids and labels differ in length");
  }
  TopicAssignment out;
  for (auto l : labels) {
    if (l < kOutlier) throw ValidationError("topic labels must be >= -1");
    if (l == kOutlier) {
      ++out.outliers;
    } else {
      ++out.topic_frequencies[l];
    }
  }
  out.ids = std::move(ids);
  out.labels = std::move(labels);
  return out;
}

TopicAssignment ClusterDensity(VectorSet const& vectors,
                               ClusterParams const& params, Execution exec) {
  params.Validate();
  auto const n = vectors.size();
  if (n < params.min_cluster_size) {
    auto out = TopicAssignment::FromLabels(vectors.ids(),
                                           std::vector<int>(n, kOutlier));
    out.warnings.push_back(
        std::to_string(n) + " points is fewer than min_cluster_size " +
        std::to_string(params.min_cluster_size) + "; all labeled outliers");
    return out;
  }
  auto min_samples = params.EffectiveMinSamples();
  std::vector<std::string> warnings;
  if (min_samples > n) {
    warnings.push_back("min_samples " + std::to_string(min_samples) +
                       " exceeds point count; using " + std::to_string(n));
    min_samples = n;
  }

  auto view = vectors.view();
  auto core = exec == Execution::kParallel
                  ? kernels::omp::CoreDistances(view, min_samples)
                  : kernels::serial::CoreDistances(view, min_samples);
  auto mst = exec == Execution::kParallel
                 ? kernels::omp::MutualReachabilityMst(view, core)
                 : kernels::serial::MutualReachabilityMst(view, core);
  auto linkage = density::SingleLinkage(std::move(mst), n);
  auto tree = density::CondenseTree(linkage, params.min_cluster_size);
  auto raw = density::SelectClusters(tree, params.allow_single_cluster,
                                     params.cluster_selection_epsilon);

  // Renumber by decreasing size; ties go to the cluster seen first.
  std::map<int, std::pair<std::size_t, std::size_t>> stats;  // size, first
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i] == kOutlier) continue;
    auto [it, fresh] = stats.try_emplace(raw[i], 0, i);
    ++it->second.first;
  }
  std::vector<int> order;
  for (auto const& [label, s] : stats) order.push_back(label);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto const& sa = stats[a];
    auto const& sb = stats[b];
    if (sa.first != sb.first) return sa.first > sb.first;
    return sa.second < sb.second;
  });
  std::map<int, int> renumber;
  for (std::size_t k = 0; k < order.size(); ++k) {
    renumber[order[k]] = static_cast<int>(k);
  }
  std::vector<int> labels(n, kOutlier);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i] != kOutlier) labels[i] = renumber[raw[i]];
  }
  auto out = TopicAssignment::FromLabels(vectors.ids(), std::move(labels));
  out.warnings = std::move(warnings);
  if (out.topic_count() == 0) {
    out.warnings.push_back("no clusters found; every point is an outlier");
  }
  return out;
}

}  // namespace soclens::classic
