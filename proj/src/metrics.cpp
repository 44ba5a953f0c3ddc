// src/metrics.cpp

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

#include "atceval/metrics.hpp"

#include <algorithm>
#include <optional>

namespace atceval {

namespace {

// Rejects reference streams that are not a valid tagged token stream: the
// stream must start with a tag and every tag must announce at least one word.
void validate_reference_stream(std::span<const std::string> ref_tokens) {
  if (ref_tokens.empty())
    throw MetricsError(MetricsErrc::kInvalidReferenceStream,
                       "empty reference token stream");
  bool pending_tag = false;
  bool any_tag = false;
  for (std::size_t i = 0; i < ref_tokens.size(); ++i) {
    if (is_tag_token(ref_tokens[i])) {
      if (pending_tag)
        throw MetricsError(MetricsErrc::kInvalidReferenceStream,
                           "reference tag with no following word");
      pending_tag = true;
      any_tag = true;
    } else {
      if (!any_tag)
        throw MetricsError(MetricsErrc::kInvalidReferenceStream,
                           "reference words precede the first tag");
      pending_tag = false;
    }
  }
  if (pending_tag)
    throw MetricsError(MetricsErrc::kInvalidReferenceStream,
                       "trailing reference tag with no word");
}

std::vector<std::string> drop_tags(std::span<const std::string> tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto &t : tokens)
    if (!is_tag_token(t)) words.push_back(t);
  return words;
}

// Role of each element of a token stream: tags carry their own class and set
// the role of what follows; elements before any tag have none.
std::vector<std::optional<SpeakerRole>> element_roles(
    std::span<const std::string> tokens) {
  std::vector<std::optional<SpeakerRole>> roles(tokens.size());
  std::optional<SpeakerRole> current;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (auto r = tag_to_role(tokens[i])) current = *r;
    roles[i] = current;
  }
  return roles;
}

struct Attribution {
  WderBreakdown wder;
  PerBreakdown per;
};

// Shared WDER/PER computation over one placeholder-padded alignment.
Attribution attribute(std::span<const std::string> ref_tokens,
                      std::span<const std::string> hyp_tokens,
                      const ScoringScheme &s) {
  validate_reference_stream(ref_tokens);
  const Alignment a = needleman_wunsch(ref_tokens, hyp_tokens, s);
  const std::vector<std::string> padded =
      insert_placeholders(ref_tokens, hyp_tokens, a);

  const auto ref_roles = element_roles(ref_tokens);
  const auto padded_roles = element_roles(padded);

  Attribution out;
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    const EditOp &op = a.ops[k];
    const bool hyp_is_tag = is_tag_token(padded[k]);
    if (op.kind == EditOpKind::kInsert) {
      if (hyp_is_tag) ++out.per.spurious_hyp_tags;
      continue;  // insertions are excluded from WDER and PER counts
    }
    const auto ref_idx = static_cast<std::size_t>(op.ref_idx);
    if (is_tag_token(ref_tokens[ref_idx])) {
      ++out.per.tag_positions;
      if (hyp_is_tag) ++out.per.correct_tags;  // class independent
    } else {
      ++out.wder.attributed_words;
      if (padded_roles[k] != ref_roles[ref_idx]) ++out.wder.role_errors;
      if (hyp_is_tag) ++out.per.spurious_hyp_tags;
    }
  }
  out.wder.wder = static_cast<double>(out.wder.role_errors) /
                  static_cast<double>(out.wder.attributed_words);
  out.per.per = 1.0 - static_cast<double>(out.per.correct_tags) /
                          static_cast<double>(out.per.tag_positions);
  return out;
}

}  // namespace

WerBreakdown wer(std::span<const std::string> ref_words,
                 std::span<const std::string> hyp_words) {
  if (ref_words.empty())
    throw MetricsError(MetricsErrc::kEmptyReference, "empty reference");
  const std::size_t n = ref_words.size();
  const std::size_t m = hyp_words.size();

  std::vector<long> dp((n + 1) * (m + 1));
  auto cell = [&](std::size_t i, std::size_t j) -> long & {
    return dp[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) cell(i, 0) = static_cast<long>(i);
  for (std::size_t j = 0; j <= m; ++j) cell(0, j) = static_cast<long>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const long diag =
          cell(i - 1, j - 1) + (ref_words[i - 1] == hyp_words[j - 1] ? 0 : 1);
      cell(i, j) = std::min({diag, cell(i - 1, j) + 1, cell(i, j - 1) + 1});
    }
  }

  WerBreakdown out;
  out.ref_len = static_cast<long>(n);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool eq = ref_words[i - 1] == hyp_words[j - 1];
      if (cell(i, j) == cell(i - 1, j - 1) + (eq ? 0 : 1)) {
        if (!eq) ++out.substitutions;
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cell(i, j) == cell(i - 1, j) + 1) {
      ++out.deletions;
      --i;
      continue;
    }
    ++out.insertions;
    --j;
  }
  out.wer = static_cast<double>(out.substitutions + out.deletions +
                                out.insertions) /
            static_cast<double>(out.ref_len);
  return out;
}

WderBreakdown wder_tokens(std::span<const std::string> ref_tokens,
                          std::span<const std::string> hyp_tokens,
                          const ScoringScheme &s) {
  return attribute(ref_tokens, hyp_tokens, s).wder;
}

PerBreakdown per_tokens(std::span<const std::string> ref_tokens,
                        std::span<const std::string> hyp_tokens,
                        const ScoringScheme &s) {
  return attribute(ref_tokens, hyp_tokens, s).per;
}

WderBreakdown wder(const TaggedTranscript &ref, const TaggedTranscript &hyp,
                   const ScoringScheme &s) {
  return wder_tokens(to_token_stream(ref), to_token_stream(hyp), s);
}

PerBreakdown per(const TaggedTranscript &ref, const TaggedTranscript &hyp,
                 const ScoringScheme &s) {
  return per_tokens(to_token_stream(ref), to_token_stream(hyp), s);
}

MetricsReport pair_metrics(std::span<const std::string> ref_tokens,
                           std::span<const std::string> hyp_tokens,
                           const ScoringScheme &s) {
  MetricsReport r;
  const Attribution att = attribute(ref_tokens, hyp_tokens, s);
  r.wder = att.wder;
  r.per = att.per;
  r.wer = wer(drop_tags(ref_tokens), drop_tags(hyp_tokens));
  r.pairs = 1;
  return r;
}

MetricsReport corpus_metrics(std::span<const EvalPair> pairs,
                             const ScoringScheme &s, Averaging averaging,
                             ExecMode exec) {
  if (pairs.empty())
    throw MetricsError(MetricsErrc::kNoPairs, "no evaluation pairs");

  std::vector<MetricsReport> per_pair(pairs.size());
  detail::for_each_index(pairs.size(), exec, [&](std::size_t i) {
    per_pair[i] = pair_metrics(pairs[i].ref_tokens, pairs[i].hyp_tokens, s);
  });

  MetricsReport pooled;
  pooled.pairs = static_cast<long>(pairs.size());
  pooled.averaging = averaging;
  double wer_sum = 0.0, wder_sum = 0.0, per_sum = 0.0;
  for (const auto &p : per_pair) {
    pooled.wer.substitutions += p.wer.substitutions;
    pooled.wer.deletions += p.wer.deletions;
    pooled.wer.insertions += p.wer.insertions;
    pooled.wer.ref_len += p.wer.ref_len;
    pooled.wder.attributed_words += p.wder.attributed_words;
    pooled.wder.role_errors += p.wder.role_errors;
    pooled.per.tag_positions += p.per.tag_positions;
    pooled.per.correct_tags += p.per.correct_tags;
    pooled.per.spurious_hyp_tags += p.per.spurious_hyp_tags;
    wer_sum += p.wer.wer;
    wder_sum += p.wder.wder;
    per_sum += p.per.per;
  }
  if (averaging == Averaging::kMicro) {
    pooled.wer.wer = static_cast<double>(pooled.wer.substitutions +
                                         pooled.wer.deletions +
                                         pooled.wer.insertions) /
                     static_cast<double>(pooled.wer.ref_len);
    pooled.wder.wder = static_cast<double>(pooled.wder.role_errors) /
                       static_cast<double>(pooled.wder.attributed_words);
    pooled.per.per = 1.0 - static_cast<double>(pooled.per.correct_tags) /
                               static_cast<double>(pooled.per.tag_positions);
  } else {
    const auto n = static_cast<double>(pairs.size());
    pooled.wer.wer = wer_sum / n;
    pooled.wder.wder = wder_sum / n;
    pooled.per.per = per_sum / n;
  }
  return pooled;
}

nlohmann::ordered_json to_json(const MetricsReport &r) {
  nlohmann::ordered_json j;
  j["pairs"] = r.pairs;
  j["averaging"] = r.averaging == Averaging::kMicro ? "micro" : "macro";
  j["wer"] = {{"substitutions", r.wer.substitutions},
              {"deletions", r.wer.deletions},
              {"insertions", r.wer.insertions},
              {"ref_len", r.wer.ref_len},
              {"wer", r.wer.wer}};
  j["wder"] = {{"attributed_words", r.wder.attributed_words},
               {"role_errors", r.wder.role_errors},
               {"wder", r.wder.wder}};
  j["per"] = {{"tag_positions", r.per.tag_positions},
              {"correct_tags", r.per.correct_tags},
              {"spurious_hyp_tags", r.per.spurious_hyp_tags},
              {"per", r.per.per}};
  return j;
}

MetricsReport metrics_report_from_json(const nlohmann::ordered_json &j) {
  MetricsReport r;
  r.pairs = j.at("pairs").get<long>();
  r.averaging = j.at("averaging").get<std::string>() == "macro"
                    ? Averaging::kMacro
                    : Averaging::kMicro;
  const auto &w = j.at("wer");
  r.wer = {w.at("substitutions").get<long>(), w.at("deletions").get<long>(),
           w.at("insertions").get<long>(), w.at("ref_len").get<long>(),
           w.at("wer").get<double>()};
  const auto &d = j.at("wder");
  r.wder = {d.at("attributed_words").get<long>(),
            d.at("role_errors").get<long>(), d.at("wder").get<double>()};
  const auto &p = j.at("per");
  r.per = {p.at("tag_positions").get<long>(), p.at("correct_tags").get<long>(),
           p.at("spurious_hyp_tags").get<long>(), p.at("per").get<double>()};
  return r;
}

}  // namespace atceval
