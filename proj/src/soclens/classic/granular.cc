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

#include "soclens/classic/granular.h"

#include <algorithm>
#include <limits>

#include "soclens/common/error.h"
#include "soclens/common/text.h"
#include "soclens/vectors/vector_set.h"

namespace soclens::classic {

std::vector<int> GranularGrouping::Members(int group) const {
  std::vector<int> out;
  for (auto const& [topic, g] : group_of) {
    if (g == group) out.push_back(topic);
  }
  return out;
}

GranularGrouping GranularGrouping::FromTable(
    std::map<int, int> group_of, std::map<int, std::string> names,
    std::map<int, std::size_t> const& topic_frequencies) {
  GranularGrouping out;
  int max_group = -1;
  for (auto const& [topic, g] : group_of) {
    if (g < 0) throw ValidationError("group labels must be >= 0");
    if (!topic_frequencies.count(topic)) {
      throw ValidationError("grouping names unknown topic " +
                            std::to_string(topic));
    }
    max_group = std::max(max_group, g);
  }
  for (auto const& [topic, freq] : topic_frequencies) {
    if (!group_of.count(topic)) {
      throw ValidationError("topic " + std::to_string(topic) +
                            " has no group");
    }
  }
  auto k = static_cast<std::size_t>(max_group + 1);
  out.group_names.resize(k);
  out.group_counts.assign(k, 0);
  std::vector<bool> seen(k, false);
  for (auto const& [topic, g] : group_of) {
    seen[static_cast<std::size_t>(g)] = true;
    out.group_counts[static_cast<std::size_t>(g)] += topic_frequencies.at(topic);
  }
  for (std::size_t g = 0; g < k; ++g) {
    if (!seen[g]) {
      throw ValidationError("group " + std::to_string(g) + " has no topics");
    }
    if (auto it = names.find(static_cast<int>(g)); it != names.end()) {
      out.group_names[g] = it->second;
    }
  }
  out.group_of = std::move(group_of);
  return out;
}

GranularGrouping GranularClusters(CtfidfModel const& model, std::size_t k,
                                  Execution exec) {
  auto const n = model.topic_count();
  if (k == 0) throw ValidationError("granular k must be >= 1");
  if (k > n) {
    throw ValidationError("granular k " + std::to_string(k) +
                          " exceeds the topic count " + std::to_string(n));
  }
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = 1.0 - Cosine(model.weights(i), model.weights(j));
      dist[i * n + j] = dist[j * n + i] = d;
    }
  }

  // Clusters hold ascending topic indices; average distances are recomputed
  // from member pairs so the result does not depend on merge history.
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  auto average = [&](auto const& a, auto const& b) {
    double s = 0.0;
    for (auto x : a) {
      for (auto y : b) s += dist[x * n + y];
    }
    return s / static_cast<double>(a.size() * b.size());
  };
  while (clusters.size() > k) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double d = average(clusters[i], clusters[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    auto& into = clusters[bi];
    into.insert(into.end(), clusters[bj].begin(), clusters[bj].end());
    std::sort(into.begin(), into.end());
    clusters.erase(clusters.begin() + static_cast<long>(bj));
    std::sort(clusters.begin(), clusters.end());
  }

  auto const v = model.vocab().size();
  std::vector<double> merged(k * v, 0.0);
  std::vector<int> group_ids(k);
  std::vector<std::size_t> group_freqs(k, 0);
  GranularGrouping out;
  for (std::size_t g = 0; g < k; ++g) {
    group_ids[g] = static_cast<int>(g);
    for (auto t : clusters[g]) {
      out.group_of[model.topics()[t]] = static_cast<int>(g);
      group_freqs[g] += model.frequencies()[t];
      auto c = model.counts(t);
      for (std::size_t w = 0; w < v; ++w) merged[g * v + w] += c[w];
    }
  }
  CtfidfModel grouped(group_ids, model.vocab(), std::move(merged), group_freqs,
                      exec);
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::string> words;
    for (auto& ww : grouped.TopWords(g, 5)) words.push_back(std::move(ww.word));
    out.group_names.push_back(Join(words, "_"));
  }
  out.group_counts = std::move(group_freqs);
  return out;
}

}  // namespace soclens::classic
