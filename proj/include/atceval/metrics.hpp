// include/atceval/metrics.hpp

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

#ifndef ATCEVAL_METRICS_HPP_
#define ATCEVAL_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "atceval/align.hpp"
#include "atceval/error.hpp"
#include "atceval/parallel.hpp"
#include "atceval/transcript.hpp"

namespace atceval {

enum class MetricsErrc {
  kEmptyReference,
  kInvalidReferenceStream,
  kNoPairs,
};

using MetricsError = CodedError<MetricsErrc>;

struct WerBreakdown {
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;
  long ref_len = 0;
  double wer = 0.0;

  bool operator==(const WerBreakdown &) const = default;
};

struct WderBreakdown {
  long attributed_words = 0;  // reference words with an aligned hyp element
  long role_errors = 0;
  double wder = 0.0;

  bool operator==(const WderBreakdown &) const = default;
};

struct PerBreakdown {
  long tag_positions = 0;     // t_p: ground-truth tag positions
  long correct_tags = 0;      // t_c: positions whose aligned element is a tag
  long spurious_hyp_tags = 0; // hyp tags aligned to ref words or inserted
  double per = 0.0;

  bool operator==(const PerBreakdown &) const = default;
};

enum class Averaging { kMicro, kMacro };

// WER + WDER + PER for one pair or a pooled corpus. Micro averaging derives
// the ratios from pooled counts; macro averaging stores the means of the
// per-pair ratios (counts stay pooled sums either way).
struct MetricsReport {
  WerBreakdown wer;
  WderBreakdown wder;
  PerBreakdown per;
  long pairs = 0;
  Averaging averaging = Averaging::kMicro;

  bool operator==(const MetricsReport &) const = default;
};

// Word error rate via unit-cost edit distance with deterministic traceback
// (diagonal, then delete, then insert). Inputs are word streams with tags
// already stripped; an empty reference is an error.
WerBreakdown wer(std::span<const std::string> ref_words,
                 std::span<const std::string> hyp_words);

// WDER and PER over the placeholder-padded Needleman-Wunsch alignment of the
// full token streams (tags included). The hypothesis stream does not need to
// be a valid tagged transcript: words before any tag carry no role and count
// as attribution errors.
WderBreakdown wder_tokens(std::span<const std::string> ref_tokens,
                          std::span<const std::string> hyp_tokens,
                          const ScoringScheme &s = {});
PerBreakdown per_tokens(std::span<const std::string> ref_tokens,
                        std::span<const std::string> hyp_tokens,
                        const ScoringScheme &s = {});

WderBreakdown wder(const TaggedTranscript &ref, const TaggedTranscript &hyp,
                   const ScoringScheme &s = {});
PerBreakdown per(const TaggedTranscript &ref, const TaggedTranscript &hyp,
                 const ScoringScheme &s = {});

// All three metrics for one (reference, hypothesis) token-stream pair.
// WER is computed on the tag-stripped word streams.
MetricsReport pair_metrics(std::span<const std::string> ref_tokens,
                           std::span<const std::string> hyp_tokens,
                           const ScoringScheme &s = {});

struct EvalPair {
  std::vector<std::string> ref_tokens;
  std::vector<std::string> hyp_tokens;
};

// Corpus aggregation. Micro pooling sums numerators and denominators across
// pairs; macro averages the per-pair ratios. Pairs are scored independently,
// in parallel when requested, and reduced in index order.
MetricsReport corpus_metrics(std::span<const EvalPair> pairs,
                             const ScoringScheme &s = {},
                             Averaging averaging = Averaging::kMicro,
                             ExecMode exec = ExecMode::kParallel);

nlohmann::ordered_json to_json(const MetricsReport &r);
MetricsReport metrics_report_from_json(const nlohmann::ordered_json &j);

}  // namespace atceval

#endif  // ATCEVAL_METRICS_HPP_
