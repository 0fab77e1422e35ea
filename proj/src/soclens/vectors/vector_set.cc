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

#include "soclens/vectors/vector_set.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "soclens/common/text.h"

namespace soclens {
namespace {

constexpr double kUnitTolerance = 1e-9;

double SquaredNorm(std::span<double const> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

std::string LineRef(std::size_t line) {
  return "vector file line " + std::to_string(line);
}

double ParseComponent(std::string_view text, std::size_t line) {
  text = Trim(text);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(LineRef(line) + ": bad number '" +
                          std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ValidationError(LineRef(line) + ": non-finite component");
  }
  return value;
}

}  // namespace

VectorSet::VectorSet(std::size_t dim, std::vector<std::string> ids,
                     std::vector<double> values, bool normalized,
                     std::string source_model)
    : dim_(dim),
      ids_(std::move(ids)),
      values_(std::move(values)),
      normalized_(normalized),
      source_model_(std::move(source_model)) {
  if (dim_ == 0) throw ValidationError("vector dimension must be positive");
  if (values_.size() != ids_.size() * dim_) {
    throw ValidationError("vector storage does not match ids x dim");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("non-finite vector component");
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw ValidationError("duplicate vector id '" + ids_[i] + "'");
    }
    if (normalized_ &&
        std::abs(std::sqrt(SquaredNorm(row(i))) - 1.0) > kUnitTolerance) {
      throw ValidationError("vector '" + ids_[i] +
                            "' is flagged normalized but is not unit length");
    }
  }
}

std::optional<std::size_t> VectorSet::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VectorSet VectorSet::Normalized() const {
  if (normalized_) return *this;
  std::vector<double> out(values_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    double n2 = SquaredNorm(row(i));
    if (n2 == 0.0) {
      throw ZeroVectorError("vector '" + ids_[i] + "' is zero", ids_[i]);
    }
    double norm = std::sqrt(n2);
    for (std::size_t k = 0; k < dim_; ++k) out[i * dim_ + k] /= norm;
  }
  return VectorSet(dim_, ids_, std::move(out), true, source_model_);
}

VectorLoadResult ParseVectors(std::string_view text,
                              corpus::Corpus const& corpus, bool normalize) {
  auto lines = SplitLines(text);
  std::size_t first = 0;
  while (first < lines.size() && Trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw ValidationError("vector file is empty");

  std::size_t dim = 0;
  std::string model;
  {
    std::istringstream header{std::string(Trim(lines[first]))};
    std::string field;
    while (header >> field) {
      if (field.rfind("dim=", 0) == 0) {
        auto digits = std::string_view(field).substr(4);
        auto [ptr, ec] = std::from_chars(
            digits.data(), digits.data() + digits.size(), dim);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) dim = 0;
      } else if (field.rfind("model=", 0) == 0) {
        model = field.substr(6);
      } else {
        throw ValidationError("unknown vector header field '" + field + "'");
      }
    }
    if (dim == 0) {
      throw ValidationError("vector file must start with dim=<D>, D > 0");
    }
  }

  std::vector<std::vector<double>> by_index(corpus.size());
  std::vector<std::string> dropped;
  std::unordered_set<std::string> seen;
  for (std::size_t li = first + 1; li < lines.size(); ++li) {
    auto line = lines[li];
    if (Trim(line).empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ValidationError(LineRef(li + 1) + ": expected <id>TAB<values>");
    }
    std::string id(line.substr(0, tab));
    if (!seen.insert(id).second) {
      throw ValidationError(LineRef(li + 1) + ": duplicate id '" + id + "'");
    }
    std::vector<double> comps;
    comps.reserve(dim);
    auto rest = line.substr(tab + 1);
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      comps.push_back(ParseComponent(rest.substr(start, comma - start), li + 1));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (comps.size() != dim) {
      throw DimensionMismatch(LineRef(li + 1) + ": expected " +
                              std::to_string(dim) + " components, found " +
                              std::to_string(comps.size()));
    }
    auto idx = corpus.IndexOf(id);
    if (!idx) {
      dropped.push_back(id);
      continue;
    }
    by_index[*idx] = std::move(comps);
  }

  std::vector<std::string> missing;
  std::vector<std::string> ids;
  std::vector<double> values;
  values.reserve(corpus.size() * dim);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (by_index[i].empty()) {
      missing.push_back(corpus[i].id);
      continue;
    }
    ids.push_back(corpus[i].id);
    values.insert(values.end(), by_index[i].begin(), by_index[i].end());
  }
  if (!missing.empty()) {
    std::string what = "vector file lacks " + std::to_string(missing.size()) +
                       " corpus id(s), first: '" + missing.front() + "'";
    throw CoverageError(what, std::move(missing));
  }
  VectorSet set(dim, std::move(ids), std::move(values), false, model);
  return {normalize ? set.Normalized() : std::move(set), std::move(dropped)};
}

VectorLoadResult LoadVectors(std::filesystem::path const& path,
                             corpus::Corpus const& corpus, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseVectors(buf.str(), corpus, normalize);
}

std::string SerializeVectors(VectorSet const& vectors) {
  std::string out = "dim=" + std::to_string(vectors.dim());
  if (!vectors.source_model().empty() &&
      vectors.source_model().find_first_of(" \t") == std::string::npos) {
    out += " model=" + vectors.source_model();
  }
  out += '\n';
  char buf[32];
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out += vectors.ids()[i];
    out += '\t';
    auto r = vectors.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k > 0) out += ',';
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r[k]);
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

double Cosine(std::span<double const> a, std::span<double const> b) {
  if (a.size() != b.size()) {
    throw ValidationError("cosine: dimension mismatch");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na == 0.0 || nb == 0.0) throw ValidationError("cosine: zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace soclens
