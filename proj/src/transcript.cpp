// src/transcript.cpp

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

#include "atceval/transcript.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace atceval {

namespace {

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

std::string_view role_tag(SpeakerRole role) {
  return role == SpeakerRole::kAtco ? kAtcoTag : kPilotTag;
}

std::optional<SpeakerRole> tag_to_role(std::string_view token) {
  if (token == kAtcoTag) return SpeakerRole::kAtco;
  if (token == kPilotTag) return SpeakerRole::kPilot;
  return std::nullopt;
}

bool is_tag_token(std::string_view token) {
  return tag_to_role(token).has_value();
}

SpeakerRole opposite_role(SpeakerRole role) {
  return role == SpeakerRole::kAtco ? SpeakerRole::kPilot : SpeakerRole::kAtco;
}

void validate_turn(const Turn &turn) {
  if (turn.words.empty())
    throw TranscriptError(TranscriptErrc::kBadTurn, "turn has no words");
  for (const auto &w : turn.words) {
    if (w.empty())
      throw TranscriptError(TranscriptErrc::kBadTurn, "empty word token");
    if (has_whitespace(w))
      throw TranscriptError(TranscriptErrc::kBadTurn,
                            "whitespace inside word token: '" + w + "'");
    if (is_tag_token(w))
      throw TranscriptError(TranscriptErrc::kBadTurn,
                            "tag literal used as a word: " + w);
  }
  if (turn.start_s.has_value() != turn.end_s.has_value())
    throw TranscriptError(TranscriptErrc::kBadTurn,
                          "turn has only one of start_s/end_s");
  if (turn.start_s) {
    if (!std::isfinite(*turn.start_s) || !std::isfinite(*turn.end_s) ||
        *turn.start_s < 0.0 || !(*turn.start_s < *turn.end_s))
      throw TranscriptError(TranscriptErrc::kBadTurn,
                            "turn timestamps must satisfy 0 <= start < end");
  }
}

TaggedTranscript::TaggedTranscript(std::vector<Turn> turns)
    : turns_(std::move(turns)) {
  if (turns_.empty())
    throw TranscriptError(TranscriptErrc::kEmptyInput, "transcript has no turns");
  for (const auto &t : turns_) validate_turn(t);
}

std::vector<std::string> tokenize_normalized(std::string_view text) {
  std::vector<std::string> tokens = split_ws(text);
  for (auto &tok : tokens) {
    if (!is_tag_token(tok)) tok = lowercase_ascii(tok);
  }
  return tokens;
}

TaggedTranscript parse_tagged(std::string_view text) {
  const std::vector<std::string> tokens = tokenize_normalized(text);
  if (tokens.empty())
    throw TranscriptError(TranscriptErrc::kEmptyInput, "empty transcript text");

  std::vector<Turn> turns;
  Turn current;
  bool in_turn = false;
  for (const auto &tok : tokens) {
    if (auto role = tag_to_role(tok)) {
      if (in_turn) {
        if (current.words.empty())
          throw TranscriptError(TranscriptErrc::kEmptyTurn,
                                "tag followed by another tag");
        turns.push_back(std::move(current));
      }
      current = Turn{};
      current.role = *role;
      in_turn = true;
    } else {
      if (!in_turn)
        throw TranscriptError(TranscriptErrc::kWordsBeforeFirstTag,
                              "word '" + tok + "' precedes the first tag");
      current.words.push_back(tok);
    }
  }
  if (current.words.empty())
    throw TranscriptError(TranscriptErrc::kEmptyTurn, "trailing tag with no words");
  turns.push_back(std::move(current));
  return TaggedTranscript(std::move(turns));
}

std::vector<std::string> to_token_stream(const TaggedTranscript &t) {
  std::vector<std::string> tokens;
  for (const auto &turn : t.turns()) {
    tokens.emplace_back(role_tag(turn.role));
    tokens.insert(tokens.end(), turn.words.begin(), turn.words.end());
  }
  return tokens;
}

std::string serialize(const TaggedTranscript &t) {
  const auto tokens = to_token_stream(t);
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> strip_tags(const TaggedTranscript &t) {
  std::vector<std::string> words;
  for (const auto &turn : t.turns())
    words.insert(words.end(), turn.words.begin(), turn.words.end());
  return words;
}

std::vector<SpeakerRole> word_roles(const TaggedTranscript &t) {
  std::vector<SpeakerRole> roles;
  for (const auto &turn : t.turns())
    roles.insert(roles.end(), turn.words.size(), turn.role);
  return roles;
}

void validate_manifest(const CorpusManifest &m) {
  std::unordered_set<std::string> ids;
  for (const auto &e : m.entries) {
    if (e.id.empty())
      throw TranscriptError(TranscriptErrc::kBadManifest, "entry with empty id");
    if (!ids.insert(e.id).second)
      throw TranscriptError(TranscriptErrc::kBadManifest,
                            "duplicate manifest id: " + e.id);
    for (const auto &t : e.turns) validate_turn(t);
  }
}

CorpusManifest chunk_corpus(const CorpusManifest &m, double min_s, double max_s) {
  validate_manifest(m);
  if (!(min_s >= 0.0) || !(min_s <= max_s))
    throw TranscriptError(TranscriptErrc::kBadManifest,
                          "chunking needs 0 <= min_s <= max_s");

  CorpusManifest out;
  for (const auto &entry : m.entries) {
    for (const auto &t : entry.turns) {
      if (!t.start_s)
        throw TranscriptError(TranscriptErrc::kMissingTimestamps,
                              "entry '" + entry.id + "' has turns without timestamps");
    }

    // Greedy packing: extend the open chunk while its span stays <= max_s.
    std::vector<std::vector<Turn>> chunks;
    std::vector<Turn> open;
    for (const auto &turn : entry.turns) {
      if (!open.empty() && *turn.end_s - *open.front().start_s > max_s) {
        chunks.push_back(std::move(open));
        open.clear();
      }
      open.push_back(turn);
    }
    if (!open.empty()) chunks.push_back(std::move(open));

    int kept = 0;
    for (auto &chunk : chunks) {
      const double span = *chunk.back().end_s - *chunk.front().start_s;
      if (span < min_s || span > max_s) continue;
      bool has_atco = false, has_pilot = false;
      for (const auto &t : chunk)
        (t.role == SpeakerRole::kAtco ? has_atco : has_pilot) = true;
      if (!has_atco || !has_pilot) continue;

      const double base = *chunk.front().start_s;
      ManifestEntry e;
      e.id = entry.id + "-c" + std::to_string(kept++);
      e.audio_path = entry.audio_path;
      for (auto &t : chunk) {
        t.start_s = *t.start_s - base;
        t.end_s = *t.end_s - base;
        e.turns.push_back(std::move(t));
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json turn_to_json(const Turn &t) {
  ordered_json j;
  j["role"] = std::string(role_tag(t.role));
  j["words"] = t.words;
  if (t.start_s) j["start_s"] = *t.start_s;
  if (t.end_s) j["end_s"] = *t.end_s;
  return j;
}

Turn turn_from_json(const ordered_json &j) {
  Turn t;
  const auto role = tag_to_role(j.at("role").get<std::string>());
  if (!role)
    throw TranscriptError(TranscriptErrc::kBadManifest,
                          "unknown role literal: " + j.at("role").dump());
  t.role = *role;
  t.words = j.at("words").get<std::vector<std::string>>();
  if (j.contains("start_s")) t.start_s = j.at("start_s").get<double>();
  if (j.contains("end_s")) t.end_s = j.at("end_s").get<double>();
  return t;
}

}  // namespace

CorpusManifest read_manifest(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw TranscriptError(TranscriptErrc::kBadManifest,
                          "cannot open manifest: " + path.string());
  CorpusManifest m;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
      ManifestEntry e;
      e.id = j.at("id").get<std::string>();
      if (j.contains("audio_path"))
        e.audio_path = j.at("audio_path").get<std::string>();
      for (const auto &tj : j.at("turns")) e.turns.push_back(turn_from_json(tj));
      m.entries.push_back(std::move(e));
    } catch (const ordered_json::exception &ex) {
      throw TranscriptError(TranscriptErrc::kBadManifest,
                            path.string() + ":" + std::to_string(lineno) + ": " +
                                ex.what());
    }
  }
  validate_manifest(m);
  return m;
}

void write_manifest(const CorpusManifest &m, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw TranscriptError(TranscriptErrc::kBadManifest,
                          "cannot write manifest: " + path.string());
  for (const auto &e : m.entries) {
    ordered_json j;
    j["id"] = e.id;
    if (e.audio_path) j["audio_path"] = *e.audio_path;
    ordered_json turns = ordered_json::array();
    for (const auto &t : e.turns) turns.push_back(turn_to_json(t));
    j["turns"] = std::move(turns);
    out << j.dump() << '\n';
  }
}

std::vector<TaggedTranscript> read_transcript_lines(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw TranscriptError(TranscriptErrc::kEmptyInput,
                          "cannot open transcript file: " + path.string());
  std::vector<TaggedTranscript> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_tagged(line));
    } catch (const TranscriptError &ex) {
      throw TranscriptError(ex.code(), path.string() + ":" +
                                           std::to_string(lineno) + ": " +
                                           ex.what());
    }
  }
  return out;
}

void write_transcript_lines(const std::vector<TaggedTranscript> &lines,
                            const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw TranscriptError(TranscriptErrc::kEmptyInput,
                          "cannot write transcript file: " + path.string());
  for (const auto &t : lines) out << serialize(t) << '\n';
}

}  // namespace atceval
