// src/align.cpp

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

#include "atceval/align.hpp"

#include <algorithm>

namespace atceval {

void validate_scheme(const ScoringScheme &s) {
  if (s.match_score <= s.mismatch_score)
    throw AlignError(AlignErrc::kBadScheme, "match_score must exceed mismatch_score");
  if (s.gap_score >= s.match_score)
    throw AlignError(AlignErrc::kBadScheme, "gap_score must be below match_score");
}

Alignment needleman_wunsch(std::span<const std::string> ref,
                           std::span<const std::string> hyp,
                           const ScoringScheme &s) {
  validate_scheme(s);
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();

  // dp[i][j]: best score aligning ref[0..i) with hyp[0..j).
  std::vector<long> dp((n + 1) * (m + 1));
  auto cell = [&](std::size_t i, std::size_t j) -> long & {
    return dp[i * (m + 1) + j];
  };
  cell(0, 0) = 0;
  for (std::size_t i = 1; i <= n; ++i) cell(i, 0) = static_cast<long>(i) * s.gap_score;
  for (std::size_t j = 1; j <= m; ++j) cell(0, j) = static_cast<long>(j) * s.gap_score;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const long diag =
          cell(i - 1, j - 1) +
          (ref[i - 1] == hyp[j - 1] ? s.match_score : s.mismatch_score);
      const long up = cell(i - 1, j) + s.gap_score;
      const long left = cell(i, j - 1) + s.gap_score;
      cell(i, j) = std::max({diag, up, left});
    }
  }

  // Traceback, preferring diagonal, then up (delete), then left (insert).
  Alignment out;
  out.score = cell(n, m);
  std::size_t i = n, j = m;
  std::vector<EditOp> rev;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool eq = ref[i - 1] == hyp[j - 1];
      const long diag = cell(i - 1, j - 1) + (eq ? s.match_score : s.mismatch_score);
      if (cell(i, j) == diag) {
        rev.push_back({eq ? EditOpKind::kMatch : EditOpKind::kSubstitute,
                       static_cast<int>(i - 1), static_cast<int>(j - 1)});
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cell(i, j) == cell(i - 1, j) + s.gap_score) {
      rev.push_back({EditOpKind::kDelete, static_cast<int>(i - 1), -1});
      --i;
      continue;
    }
    rev.push_back({EditOpKind::kInsert, -1, static_cast<int>(j - 1)});
    --j;
  }
  out.ops.assign(rev.rbegin(), rev.rend());
  return out;
}

std::vector<std::string> insert_placeholders(std::span<const std::string> ref,
                                             std::span<const std::string> hyp,
                                             const Alignment &a) {
  auto collides = [](std::span<const std::string> toks) {
    return std::any_of(toks.begin(), toks.end(), [](const std::string &t) {
      return t == kDeletionPlaceholder;
    });
  };
  if (collides(ref) || collides(hyp))
    throw AlignError(AlignErrc::kPlaceholderCollision,
                     "input tokens contain the reserved placeholder '<del>'");

  std::vector<std::string> padded;
  padded.reserve(a.ops.size());
  for (const auto &op : a.ops) {
    if (op.kind == EditOpKind::kDelete)
      padded.emplace_back(kDeletionPlaceholder);
    else
      padded.push_back(hyp[static_cast<std::size_t>(op.hyp_idx)]);
  }
  return padded;
}

}  // namespace atceval
