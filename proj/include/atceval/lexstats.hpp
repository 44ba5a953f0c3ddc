// include/atceval/lexstats.hpp

// Copyright 2026  the atceval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ATCEVAL_LEXSTATS_HPP_
#define ATCEVAL_LEXSTATS_HPP_

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "atceval/error.hpp"
#include "atceval/parallel.hpp"

namespace atceval {

enum class LmErrc {
  kEmptyCorpus,
  kEmptyTest,
  kBadModel,
};

using LmError = CodedError<LmErrc>;

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";
inline constexpr std::string_view kUnknownWord = "<unk>";

struct LmOptions {
  double discount = 0.75;
  // Replace training words seen once by "<unk>" so the unknown word carries
  // the singleton mass. With it off "<unk>" still gets probability from the
  // uniform base of the interpolation chain.
  bool map_hapax_to_unk = true;
};

// Interpolated Kneser-Ney 4-gram model with a fixed absolute discount.
//
// Counting: sentences are padded with three "<s>" and one "</s>"; k-grams
// ending in "<s>" are never counted. The top order keeps raw counts; lower
// orders use continuation counts (distinct left extensions), except that
// grams starting with "<s>" keep raw counts since nothing can precede "<s>".
// The interpolation chain bottoms out in a uniform distribution over the
// prediction vocabulary, which keeps every context normalized and every
// vocabulary word (including "<unk>") strictly positive.
class NGramModel {
 public:
  static constexpr int kOrder = 4;

  // p(word | context), context being up to kOrder-1 preceding tokens.
  // Out-of-vocabulary tokens on either side are mapped to "<unk>".
  double prob(const std::string &word,
              std::span<const std::string> context) const;

  // Natural-log probability of a sentence (tags stripped, "</s>" included).
  double sentence_log_prob(std::span<const std::string> words) const;

  // Prediction vocabulary: training words plus "<unk>" and "</s>", sorted.
  const std::vector<std::string> &vocabulary() const { return vocab_; }
  bool in_vocabulary(const std::string &w) const {
    return vocab_set_.contains(w);
  }
  double discount() const { return opts_.discount; }
  const LmOptions &options() const { return opts_; }

  // All stored contexts of the given order (1..kOrder), for diagnostics and
  // normalization checks. A context of order k has k-1 tokens.
  std::vector<std::vector<std::string>> contexts(int order) const;

  nlohmann::ordered_json to_json() const;
  static NGramModel from_json(const nlohmann::ordered_json &j);

 private:
  friend NGramModel train_lm(
      const std::vector<std::vector<std::string>> &sentences, LmOptions opts);

  struct ContextAgg {
    long total = 0;  // sum of adjusted counts following this context
    long types = 0;  // number of distinct continuations
  };

  void rebuild_aggregates();

  LmOptions opts_;
  std::vector<std::string> vocab_;
  std::unordered_set<std::string> vocab_set_;
  // adjusted_[k-1]: space-joined k-gram -> adjusted count.
  std::vector<std::unordered_map<std::string, long>> adjusted_;
  // context_[k-1]: space-joined (k-1)-gram -> aggregate ("" at order 1).
  std::vector<std::unordered_map<std::string, ContextAgg>> context_;
};

// Builds the model from tokenized sentences. Tag literals are stripped
// before counting. Throws LmError(kEmptyCorpus) on an empty sentence list.
NGramModel train_lm(const std::vector<std::vector<std::string>> &sentences,
                    LmOptions opts = {});

// exp(-(1/N) sum log p), N counting word tokens plus one "</s>" per
// sentence. Sentences are scored independently (parallel when requested)
// and reduced in index order.
double perplexity(const NGramModel &m,
                  const std::vector<std::vector<std::string>> &test_sentences,
                  ExecMode exec = ExecMode::kParallel);

struct OovStats {
  long token_count = 0;
  long oov_token_count = 0;
  double oov_rate = 0.0;
};

// Distinct words of a corpus, tags excluded.
std::unordered_set<std::string> word_vocabulary(
    const std::vector<std::vector<std::string>> &sentences);

// Token-level out-of-vocabulary rate of the test corpus against a training
// vocabulary; tag literals are excluded from both counts.
OovStats oov_rate(const std::unordered_set<std::string> &train_vocab,
                  const std::vector<std::vector<std::string>> &test_sentences);

struct LexReport {
  double perplexity = 0.0;
  OovStats oov;
};

}  // namespace atceval

#endif  // ATCEVAL_LEXSTATS_HPP_
