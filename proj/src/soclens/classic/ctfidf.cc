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

#include "soclens/classic/ctfidf.h"

#include <algorithm>
#include <map>

#include "soclens/common/error.h"
#include "soclens/kernels/kernels.h"

namespace soclens::classic {

std::string TopicSummary::Render(std::size_t n) const {
  std::string out;
  for (std::size_t i = 0; i < top_words.size() && i < n; ++i) {
    if (i) out += ' ';
    out += top_words[i].word;
  }
  return out;
}

CtfidfModel::CtfidfModel(std::vector<int> topics,
                         std::vector<std::string> vocab,
                         std::vector<double> counts,
                         std::vector<std::size_t> frequencies, Execution exec)
    : topics_(std::move(topics)),
      vocab_(std::move(vocab)),
      counts_(std::move(counts)),
      frequencies_(std::move(frequencies)) {
  auto const classes = topics_.size();
  auto const v = vocab_.size();
  if (classes == 0) throw ValidationError("c-TF-IDF needs at least one topic");
  if (counts_.size() != classes * v || frequencies_.size() != classes) {
    throw ValidationError("c-TF-IDF count matrix has the wrong shape");
  }
  if (!std::is_sorted(vocab_.begin(), vocab_.end()) ||
      std::adjacent_find(vocab_.begin(), vocab_.end()) != vocab_.end()) {
    throw ValidationError("c-TF-IDF vocabulary must be sorted and unique");
  }
  term_totals_.assign(v, 0.0);
  double grand_total = 0.0;
  for (std::size_t c = 0; c < classes; ++c) {
    double class_total = 0.0;
    for (std::size_t t = 0; t < v; ++t) {
      auto x = counts_[c * v + t];
      if (x < 0) throw ValidationError("c-TF-IDF counts must be >= 0");
      term_totals_[t] += x;
      class_total += x;
    }
    if (class_total == 0.0) {
      throw ValidationError("topic " + std::to_string(topics_[c]) +
                            " has no tokens");
    }
    grand_total += class_total;
  }
  average_ = grand_total / static_cast<double>(classes);
  weights_.assign(counts_.size(), 0.0);
  if (exec == Execution::kParallel) {
    kernels::omp::CtfidfWeights(counts_, classes, v, term_totals_, average_,
                                weights_);
  } else {
    kernels::serial::CtfidfWeights(counts_, classes, v, term_totals_, average_,
                                   weights_);
  }
}

double CtfidfModel::Weight(std::size_t k, std::string_view word) const {
  auto it = std::lower_bound(vocab_.begin(), vocab_.end(), word);
  if (it == vocab_.end() || *it != word) return 0.0;
  return weights(k)[static_cast<std::size_t>(it - vocab_.begin())];
}

std::vector<WordWeight> CtfidfModel::TopWords(std::size_t k,
                                              std::size_t top_n) const {
  auto w = weights(k);
  std::vector<std::size_t> idx;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] > 0.0) idx.push_back(t);
  }
  // Vocabulary is sorted, so index order is lexicographic word order.
  auto better = [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  };
  auto keep = std::min(top_n, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<long>(keep),
                    idx.end(), better);
  std::vector<WordWeight> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back({vocab_[idx[i]], w[idx[i]]});
  return out;
}

std::vector<TopicSummary> CtfidfModel::Summaries(std::size_t top_n) const {
  std::vector<TopicSummary> out;
  out.reserve(topics_.size());
  for (std::size_t k = 0; k < topics_.size(); ++k) {
    out.push_back({topics_[k], TopWords(k, top_n), frequencies_[k]});
  }
  return out;
}

CtfidfModel BuildCtfidf(corpus::Corpus const& corpus,
                        TopicAssignment const& assignment,
                        TokenizerOptions const& options, Execution exec) {
  if (assignment.size() != corpus.size()) {
    throw ValidationError("assignment does not cover the corpus");
  }
  std::map<int, std::size_t> topic_index;
  for (auto const& [topic, freq] : assignment.topic_frequencies) {
    topic_index.emplace(topic, topic_index.size());
  }
  if (topic_index.empty()) {
    throw ValidationError("c-TF-IDF needs at least one non-outlier topic");
  }
  std::vector<std::map<std::string, double>> class_counts(topic_index.size());
  std::map<std::string, std::size_t> vocab_index;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (assignment.ids[i] != corpus[i].id) {
      throw ValidationError("assignment id '" + assignment.ids[i] +
                            "' does not match corpus order");
    }
    if (assignment.labels[i] == kOutlier) continue;
    auto& bag = class_counts[topic_index.at(assignment.labels[i])];
    for (auto& tok : Tokenize(corpus[i].prompt, options)) {
      vocab_index.emplace(tok, 0);
      bag[std::move(tok)] += 1.0;
    }
  }
  std::vector<std::string> vocab;
  vocab.reserve(vocab_index.size());
  for (auto& [word, idx] : vocab_index) {
    idx = vocab.size();
    vocab.push_back(word);
  }
  std::vector<int> topics;
  std::vector<std::size_t> freqs;
  std::vector<double> counts(topic_index.size() * vocab.size(), 0.0);
  for (auto const& [topic, k] : topic_index) {
    topics.push_back(topic);
    freqs.push_back(assignment.topic_frequencies.at(topic));
    for (auto const& [word, c] : class_counts[k]) {
      counts[k * vocab.size() + vocab_index.at(word)] = c;
    }
  }
  return CtfidfModel(std::move(topics), std::move(vocab), std::move(counts),
                     std::move(freqs), exec);
}

std::vector<TopicSummary> Ctfidf(corpus::Corpus const& corpus,
                                 TopicAssignment const& assignment,
                                 std::size_t top_n,
                                 TokenizerOptions const& options,
                                 Execution exec) {
  return BuildCtfidf(corpus, assignment, options, exec).Summaries(top_n);
}

}  // namespace soclens::classic
