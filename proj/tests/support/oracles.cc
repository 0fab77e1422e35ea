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

#include "oracles.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace soclens::testing {

std::filesystem::path DataDir() { return SOCLENS_TEST_DATA_DIR; }

std::string ReadText(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double ExhaustiveMstWeight(std::vector<double> const& dist, std::size_t n) {
  if (n <= 1) return 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  double best = INFINITY;
  std::vector<std::size_t> pick;
  // Enumerate (n-1)-subsets recursively.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == n - 1) {
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      double w = 0.0;
      for (auto e : pick) {
        auto a = find(edges[e].first), b = find(edges[e].second);
        if (a == b) return;
        parent[a] = b;
        w += dist[edges[e].first * n + edges[e].second];
      }
      best = std::min(best, w);
      return;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

std::map<std::string, std::map<std::string, double>> BruteForceCtfidf(
    std::map<std::string, std::string> const& class_docs) {
  std::map<std::string, std::map<std::string, double>> tf;
  std::map<std::string, double> f;
  double all = 0.0;
  for (auto const& [c, doc] : class_docs) {
    std::istringstream in(doc);
    std::string w;
    auto& row = tf[c];
    while (in >> w) {
      row[w] += 1.0;
      f[w] += 1.0;
      all += 1.0;
    }
  }
  double avg = all / static_cast<double>(class_docs.size());
  std::map<std::string, std::map<std::string, double>> out;
  for (auto const& [c, row] : tf) {
    for (auto const& [t, _] : f) {
      auto it = row.find(t);
      double count = it == row.end() ? 0.0 : it->second;
      out[c][t] = count * std::log(1.0 + avg / f[t]);
    }
  }
  return out;
}

double AdjustedRand(std::vector<int> const& a, std::vector<int> const& b) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> ra, rb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1;
    ra[a[i]] += 1;
    rb[b[i]] += 1;
  }
  auto c2 = [](double x) { return x * (x - 1) / 2; };
  double index = 0, sa = 0, sb = 0;
  for (auto const& [k, v] : joint) index += c2(v);
  for (auto const& [k, v] : ra) sa += c2(v);
  for (auto const& [k, v] : rb) sb += c2(v);
  double total = c2(static_cast<double>(a.size()));
  double expected = sa * sb / total;
  double max_index = (sa + sb) / 2;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

bool SamePartition(std::vector<int> const& a, std::vector<int> const& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == -1) != (b[i] == -1)) return false;
    if (a[i] == -1) continue;
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

std::vector<double> ReadPoints(std::filesystem::path const& path,
                               std::size_t& dim) {
  std::istringstream in(ReadText(path));
  std::vector<double> out;
  std::string line;
  dim = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t d = 0;
    while (std::getline(row, cell, ',')) {
      out.push_back(std::stod(cell));
      ++d;
    }
    dim = d;
  }
  return out;
}

std::vector<int> ReadLabels(std::filesystem::path const& path) {
  std::istringstream in(ReadText(path));
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

Blobs MakeBlobs(std::vector<std::vector<double>> const& centers,
                std::size_t per_blob, double sigma, std::uint64_t seed) {
  Blobs b;
  b.dim = centers.front().size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  for (std::size_t c = 0; c < centers.size(); ++c) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      for (auto x : centers[c]) b.points.push_back(x + noise(rng));
      b.labels.push_back(static_cast<int>(c));
    }
  }
  return b;
}

}  // namespace soclens::testing
