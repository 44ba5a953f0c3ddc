// include/atceval/transcript.hpp

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

#ifndef ATCEVAL_TRANSCRIPT_HPP_
#define ATCEVAL_TRANSCRIPT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atceval/error.hpp"

namespace atceval {

// The two speaker roles of an ATC exchange. The serialized tag literals are
// fixed; anything else in a token stream is an ordinary word.
enum class SpeakerRole { kAtco, kPilot };

inline constexpr std::string_view kAtcoTag = "ATCOTAG";
inline constexpr std::string_view kPilotTag = "PILOTTAG";

std::string_view role_tag(SpeakerRole role);
std::optional<SpeakerRole> tag_to_role(std::string_view token);
bool is_tag_token(std::string_view token);
SpeakerRole opposite_role(SpeakerRole role);

enum class TranscriptErrc {
  kEmptyInput,
  kWordsBeforeFirstTag,
  kEmptyTurn,
  kBadTurn,
  kMissingTimestamps,
  kBadManifest,
};

using TranscriptError = CodedError<TranscriptErrc>;

// One speaker turn: a role and the words spoken, optionally with start/end
// times in seconds (manifests carry timestamps, plain text does not).
struct Turn {
  SpeakerRole role = SpeakerRole::kAtco;
  std::vector<std::string> words;
  std::optional<double> start_s;
  std::optional<double> end_s;

  bool operator==(const Turn &) const = default;
};

// Throws TranscriptError(kBadTurn) unless the turn has at least one word,
// no tag literals or whitespace inside tokens, and ordered timestamps.
void validate_turn(const Turn &turn);

// An ordered, non-empty sequence of validated turns.
class TaggedTranscript {
 public:
  explicit TaggedTranscript(std::vector<Turn> turns);

  const std::vector<Turn> &turns() const noexcept { return turns_; }

  bool operator==(const TaggedTranscript &) const = default;

 private:
  std::vector<Turn> turns_;
};

// Parses a whitespace-separated token stream. Words are lowercased; the tag
// literals must appear in their exact uppercase form. A repeated same-role
// tag starts a new turn.
TaggedTranscript parse_tagged(std::string_view text);

// Canonical token stream: each turn's tag followed by its words.
// parse_tagged(serialize(t)) == t for every valid t with lowercase words.
std::vector<std::string> to_token_stream(const TaggedTranscript &t);
std::string serialize(const TaggedTranscript &t);

// All words in order, tags dropped.
std::vector<std::string> strip_tags(const TaggedTranscript &t);

// One role per word of strip_tags(t), inherited from the enclosing turn.
std::vector<SpeakerRole> word_roles(const TaggedTranscript &t);

struct ManifestEntry {
  std::string id;
  std::optional<std::string> audio_path;
  std::vector<Turn> turns;

  bool operator==(const ManifestEntry &) const = default;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  bool operator==(const CorpusManifest &) const = default;
};

// Throws TranscriptError(kBadManifest) on duplicate ids or invalid turns.
void validate_manifest(const CorpusManifest &m);

// Greedy left-to-right packing of consecutive turns into chunks whose span
// (last end_s - first start_s) stays within [min_s, max_s]. Chunks outside
// the range or containing a single role are discarded; kept chunks have
// their timestamps re-based to the chunk start. Requires timestamps on
// every turn (TranscriptError(kMissingTimestamps) otherwise).
CorpusManifest chunk_corpus(const CorpusManifest &m, double min_s = 2.0,
                            double max_s = 19.0);

// JSON Lines manifest IO. One entry per line:
//   {"id": "...", "audio_path": "...", "turns": [{"role": "ATCOTAG",
//    "words": [...], "start_s": 0.0, "end_s": 5.0}, ...]}
// audio_path, start_s and end_s are optional.
CorpusManifest read_manifest(const std::filesystem::path &path);
void write_manifest(const CorpusManifest &m, const std::filesystem::path &path);

// Plain-text transcript files: one utterance per line, single-space tokens.
std::vector<TaggedTranscript> read_transcript_lines(
    const std::filesystem::path &path);
void write_transcript_lines(const std::vector<TaggedTranscript> &lines,
                            const std::filesystem::path &path);

// Whitespace tokenizer with the parser's normalization (words lowercased,
// tag literals kept verbatim). Accepts streams that are not valid tagged
// transcripts; used for lenient hypothesis ingestion.
std::vector<std::string> tokenize_normalized(std::string_view text);

}  // namespace atceval

#endif  // ATCEVAL_TRANSCRIPT_HPP_
