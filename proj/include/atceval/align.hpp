// include/atceval/align.hpp

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

#ifndef ATCEVAL_ALIGN_HPP_
#define ATCEVAL_ALIGN_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atceval/error.hpp"

namespace atceval {

enum class AlignErrc {
  kBadScheme,
  kPlaceholderCollision,
};

using AlignError = CodedError<AlignErrc>;

// Global alignment scores. Defaults are the usual +1/-1/-1.
struct ScoringScheme {
  int match_score = 1;
  int mismatch_score = -1;
  int gap_score = -1;
};

// Throws AlignError(kBadScheme) unless match > mismatch and gap < match.
void validate_scheme(const ScoringScheme &s);

enum class EditOpKind { kMatch, kSubstitute, kDelete, kInsert };

// One step of a global alignment. ref_idx is set for match/substitute/delete,
// hyp_idx for match/substitute/insert; unused indices are -1.
struct EditOp {
  EditOpKind kind = EditOpKind::kMatch;
  int ref_idx = -1;
  int hyp_idx = -1;

  bool operator==(const EditOp &) const = default;
};

struct Alignment {
  std::vector<EditOp> ops;
  long score = 0;
};

// Maximum-score global alignment of two token sequences. Ties during
// traceback are broken diagonal (match/substitute) first, then delete, then
// insert, so the result is fully deterministic. Tags align as ordinary
// tokens. Either sequence may be empty.
Alignment needleman_wunsch(std::span<const std::string> ref,
                           std::span<const std::string> hyp,
                           const ScoringScheme &s = {});

// Reserved hypothesis-side token standing in for a non-transcribed word.
inline constexpr std::string_view kDeletionPlaceholder = "<del>";

// Rewrites the hypothesis along the alignment: every deleted reference token
// gets a "<del>" placeholder, so each reference token has exactly one aligned
// hypothesis element; inserted hypothesis tokens stay in place. Throws
// AlignError(kPlaceholderCollision) if "<del>" already occurs in the inputs.
std::vector<std::string> insert_placeholders(std::span<const std::string> ref,
                                             std::span<const std::string> hyp,
                                             const Alignment &a);

}  // namespace atceval

#endif  // ATCEVAL_ALIGN_HPP_
