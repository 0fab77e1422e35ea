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

#ifndef SOCLENS_CLASSIC_CTFIDF_H_
#define SOCLENS_CLASSIC_CTFIDF_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soclens/classic/density.h"
#include "soclens/common/execution.h"
#include "soclens/corpus/corpus.h"
#include "soclens/vectors/tokenizer.h"

namespace soclens::classic {

struct WordWeight {
  std::string word;
  double weight = 0.0;

  friend bool operator==(WordWeight const&, WordWeight const&) = default;
};

struct TopicSummary {
  int topic = 0;
  std::vector<WordWeight> top_words;  // weight descending, then word
  std::size_t frequency = 0;

  // Top `n` words joined by spaces, e.g. "powershell get system object".
  std::string Render(std::size_t n = 4) const;

  friend bool operator==(TopicSummary const&, TopicSummary const&) = default;
};

// Class-based TF-IDF over a topics x vocabulary count matrix:
//   W(t, c) = tf(t, c) * ln(1 + A / f(t))
// with f(t) the count of t over all classes and A the mean token count per
// class.
class CtfidfModel {
 public:
  // `counts` is row-major topics x vocab; `vocab` must be sorted and unique.
  // Throws ValidationError on shape errors or a class without tokens.
  CtfidfModel(std::vector<int> topics, std::vector<std::string> vocab,
              std::vector<double> counts, std::vector<std::size_t> frequencies,
              Execution exec = Execution::kParallel);

  std::vector<int> const& topics() const { return topics_; }
  std::vector<std::string> const& vocab() const { return vocab_; }
  std::vector<std::size_t> const& frequencies() const { return frequencies_; }
  std::vector<double> const& term_totals() const { return term_totals_; }
  double average_class_tokens() const { return average_; }
  std::size_t topic_count() const { return topics_.size(); }

  std::span<double const> counts(std::size_t k) const {
    return std::span<double const>(counts_).subspan(k * vocab_.size(),
                                                    vocab_.size());
  }
  std::span<double const> weights(std::size_t k) const {
    return std::span<double const>(weights_).subspan(k * vocab_.size(),
                                                     vocab_.size());
  }
  // Weight of `word` in the k-th topic; 0 for unknown words.
  double Weight(std::size_t k, std::string_view word) const;

  // Top `top_n` nonzero-weight words of the k-th topic.
  std::vector<WordWeight> TopWords(std::size_t k, std::size_t top_n) const;
  std::vector<TopicSummary> Summaries(std::size_t top_n) const;

 private:
  std::vector<int> topics_;
  std::vector<std::string> vocab_;
  std::vector<double> counts_;
  std::vector<std::size_t> frequencies_;
  std::vector<double> term_totals_;
  double average_ = 0.0;
  std::vector<double> weights_;
};

// Concatenates each topic's prompts, tokenizes and builds the model. The
// outlier class takes no part. Topics appear in ascending label order.
// Throws ValidationError if the assignment does not match the corpus, has no
// topics, or a topic has no tokens.
CtfidfModel BuildCtfidf(corpus::Corpus const& corpus,
                        TopicAssignment const& assignment,
                        TokenizerOptions const& options = {},
                        Execution exec = Execution::kParallel);

std::vector<TopicSummary> Ctfidf(corpus::Corpus const& corpus,
                                 TopicAssignment const& assignment,
                                 std::size_t top_n,
                                 TokenizerOptions const& options = {},
                                 Execution exec = Execution::kParallel);

}  // namespace soclens::classic

#endif  // SOCLENS_CLASSIC_CTFIDF_H_
