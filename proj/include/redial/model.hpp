// redial/model.hpp
//
// Copyright 2024  Redial Authors
//
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
//
// Corpus model: conversation naming grammar, the three metadata tables, and
// on-disk discovery of recordings and markup files.
//
// A corpus input tree looks like
//
//   <input>/participant.csv
//   <input>/producer.csv
//   <input>/conversation.csv
//   <input>/recordings/EN_001.wav          (stereo, one file)  or
//   <input>/recordings/EN_001/7.wav        (dual mono, one file per
//   <input>/recordings/EN_001/8.wav         participant id)
//   <input>/recordings/EN_001.eaf          (or EN_001/EN_001.eaf)
//
// Identifiers the diagnostic pass judges later (conversation id, OG/RE code,
// trans_id) are kept verbatim at load time next to their parsed forms;
// everything else is validated strictly while loading.

#ifndef REDIAL_MODEL_HPP_
#define REDIAL_MODEL_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redial/csv.hpp"
#include "redial/errors.hpp"
#include "redial/io.hpp"
#include "redial/lang.hpp"

namespace redial {

// ---------------------------------------------------------------------------
// Naming grammar.

struct ConversationId {
  LanguageCode lang;
  int number = 0;  // 0..999, rendered zero-padded to three digits

  // Canonical text form, e.g. "EN_633".
  std::string Canonical() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%s_%03d", lang.upper().c_str(), number);
    return buf;
  }

  friend bool operator==(const ConversationId &a, const ConversationId &b) {
    return a.lang == b.lang && a.number == b.number;
  }
  friend bool operator!=(const ConversationId &a, const ConversationId &b) { return !(a == b); }
  friend bool operator<(const ConversationId &a, const ConversationId &b) {
    if (a.lang != b.lang) return a.lang < b.lang;
    return a.number < b.number;
  }
};

enum class OgRe { kOriginal, kReenacted };

inline std::string_view ToText(OgRe kind) {
  return kind == OgRe::kOriginal ? "OG" : "RE";
}

inline OgRe Opposite(OgRe kind) {
  return kind == OgRe::kOriginal ? OgRe::kReenacted : OgRe::kOriginal;
}

// Text forms are exactly "OG" and "RE"; anything else is not a code.
inline std::optional<OgRe> TryParseOgRe(std::string_view text) {
  if (text == "OG") return OgRe::kOriginal;
  if (text == "RE") return OgRe::kReenacted;
  return std::nullopt;
}

// `<two-letter language code>_<three digits>`. Letters are accepted in either
// case; the canonical form is uppercase. Throws IdError naming the violated
// rule.
inline ConversationId parse_conversation_id(std::string_view text) {
  auto fail = [&](const std::string &why) -> ConversationId {
    throw IdError("conversation id \"" + std::string(text) + "\": " + why);
  };
  size_t underscore = text.find('_');
  if (underscore == std::string_view::npos) {
    return fail("expected <language code>_<three digits>, found no underscore");
  }
  std::string_view lang_part = text.substr(0, underscore);
  std::string_view digit_part = text.substr(underscore + 1);
  LanguageCode lang;
  if (!LanguageCode::FromText(lang_part, &lang)) {
    return fail("\"" + std::string(lang_part) + "\" is not an assigned two-letter language code");
  }
  if (digit_part.size() != 3) {
    return fail("expected exactly three digits after the underscore, got \"" +
                std::string(digit_part) + "\"");
  }
  int number = 0;
  for (char c : digit_part) {
    if (c < '0' || c > '9') {
      return fail("expected exactly three digits after the underscore, got \"" +
                  std::string(digit_part) + "\"");
    }
    number = number * 10 + (c - '0');
  }
  return ConversationId{lang, number};
}

inline std::optional<ConversationId> TryParseConversationId(std::string_view text) {
  try {
    return parse_conversation_id(text);
  } catch (const IdError &) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Metadata tables.

struct Participant {
  int64_t id = 0;
  LanguageCode lang1;
  LanguageCode lang2;
  int lang_strength = 0;  // 1..5, stored verbatim, not interpreted
  std::string dialect_note1;
  std::string dialect_note2;
  bool is_producer = false;
  std::string notes;
};

struct Producer {
  int64_t id = 0;
  std::string name;
};

enum class AudioLayout { kNone, kStereoSingle, kDualMono };

// What discovery found on disk for one conversation.
struct ConversationFiles {
  AudioLayout layout = AudioLayout::kNone;
  std::filesystem::path audio_path;   // STEREO_SINGLE: the .wav; DUAL_MONO: the folder
  std::filesystem::path left_path;    // DUAL_MONO members
  std::filesystem::path right_path;
  bool has_markup = false;
  std::filesystem::path markup_path;
};

struct ConversationRecord {
  std::string raw_id;      // verbatim CSV text; `id` below when it parses
  std::string date;        // dd_mm_yyyy
  std::string raw_og_re;   // verbatim CSV text; `og_re` below when it parses
  int64_t participant_id_left = 0;
  int64_t participant_id_right = 0;
  int64_t producer_id = 0;
  std::string raw_trans_id;  // verbatim; empty = absent

  std::optional<ConversationId> id;
  std::optional<OgRe> og_re;
  ConversationFiles files;

  // File-name stem: the canonical id when it parses, the raw text otherwise.
  std::string Stem() const { return id ? id->Canonical() : raw_id; }
};

struct MetadataTables {
  std::vector<Participant> participants;
  std::vector<Producer> producers;
  std::vector<ConversationRecord> conversations;
};

struct Corpus {
  std::filesystem::path recordings_dir;
  std::vector<Participant> participants;
  std::vector<Producer> producers;
  std::vector<ConversationRecord> conversations;

  const Participant *FindParticipant(int64_t id) const {
    for (const auto &p : participants) {
      if (p.id == id) return &p;
    }
    return nullptr;
  }
  const Producer *FindProducer(int64_t id) const {
    for (const auto &p : producers) {
      if (p.id == id) return &p;
    }
    return nullptr;
  }
  const ConversationRecord *FindConversation(std::string_view stem) const {
    for (const auto &c : conversations) {
      if (c.Stem() == stem) return &c;
    }
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Translation lookup.

enum class TranslationOutcome { kFound, kNone, kAmbiguous };

struct TranslationResult {
  TranslationOutcome outcome = TranslationOutcome::kNone;
  // Conversations whose id has the same three digits, a different language,
  // and the opposite OG/RE code. Exactly one element when outcome is kFound.
  std::vector<const ConversationRecord *> candidates;

  const ConversationRecord *partner() const {
    return outcome == TranslationOutcome::kFound ? candidates.front() : nullptr;
  }
};

inline TranslationResult find_translation(const ConversationRecord &conv, const Corpus &corpus) {
  TranslationResult result;
  if (!conv.id || !conv.og_re) return result;
  for (const auto &other : corpus.conversations) {
    if (&other == &conv) continue;
    if (!other.id || !other.og_re) continue;
    if (other.id->number != conv.id->number) continue;
    if (other.id->lang == conv.id->lang) continue;
    if (*other.og_re != Opposite(*conv.og_re)) continue;
    result.candidates.push_back(&other);
  }
  result.outcome = result.candidates.size() == 1 ? TranslationOutcome::kFound
                   : result.candidates.empty()   ? TranslationOutcome::kNone
                                                 : TranslationOutcome::kAmbiguous;
  return result;
}

// ---------------------------------------------------------------------------
// CSV loading.

namespace detail {

inline const char *const kParticipantHeader[] = {"id",            "lang1",
                                                 "lang2",         "lang_strength",
                                                 "dialect_note1", "dialect_note2",
                                                 "is_producer",   "notes"};
inline const char *const kConversationHeader[] = {"id",
                                                  "date",
                                                  "original_or_reenacted",
                                                  "participant_id_left",
                                                  "participant_id_right",
                                                  "producer_id",
                                                  "trans_id"};
inline const char *const kProducerHeader[] = {"id", "name"};

inline std::optional<int64_t> ParseInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

[[noreturn]] inline void FieldError(const std::string &file, int line, size_t column,
                                    const char *field_name, const std::string &why) {
  throw MetadataError(file + " line " + std::to_string(line) + ", column " +
                      std::to_string(column + 1) + " (" + field_name + "): " + why);
}

template <size_t N>
inline std::vector<csv::Record> LoadRows(const std::filesystem::path &path,
                                         const char *const (&header)[N]) {
  if (!std::filesystem::exists(path)) {
    throw MetadataError(path.filename().string() + ": file not found in " +
                        path.parent_path().string());
  }
  std::string name = path.filename().string();
  std::string bytes = ReadFile(path);
  // Tolerate a UTF-8 byte-order mark from spreadsheet exports.
  if (bytes.rfind("\xEF\xBB\xBF", 0) == 0) bytes.erase(0, 3);
  std::vector<csv::Record> rows = csv::Parse(bytes, name);
  if (rows.empty()) throw MetadataError(name + ": empty file, expected a header row");
  const auto &head = rows.front().fields;
  bool ok = head.size() == N;
  for (size_t i = 0; ok && i < N; ++i) ok = head[i] == header[i];
  if (!ok) {
    std::string expected;
    for (size_t i = 0; i < N; ++i) {
      if (i) expected += ',';
      expected += header[i];
    }
    throw MetadataError(name + " line " + std::to_string(rows.front().line) +
                        ": header must be exactly \"" + expected + "\"");
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].fields.size() != N) {
      throw MetadataError(name + " line " + std::to_string(rows[r].line) + ": expected " +
                          std::to_string(N) + " fields, got " +
                          std::to_string(rows[r].fields.size()));
    }
  }
  return rows;
}

inline bool ValidDateShape(std::string_view date) {
  // dd_mm_yyyy with day 01..31 and month 01..12.
  if (date.size() != 10 || date[2] != '_' || date[5] != '_') return false;
  for (size_t i : {0u, 1u, 3u, 4u, 6u, 7u, 8u, 9u}) {
    if (date[i] < '0' || date[i] > '9') return false;
  }
  int day = (date[0] - '0') * 10 + (date[1] - '0');
  int month = (date[3] - '0') * 10 + (date[4] - '0');
  return day >= 1 && day <= 31 && month >= 1 && month <= 12;
}

inline std::string FoldCase(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace detail

// Loads participant.csv, producer.csv, and conversation.csv from `dir`.
// Strict on everything the diagnostic taxonomy does not cover: header shape,
// field types, date shape, language codes, lang_strength range, unique ids, and
// referential integrity of participant/producer references. Conversation id,
// OG/RE code, and trans_id are kept verbatim for validation to diagnose.
inline MetadataTables load_metadata(const std::filesystem::path &dir) {
  MetadataTables tables;

  {
    auto rows = detail::LoadRows(dir / "participant.csv", detail::kParticipantHeader);
    std::set<int64_t> seen;
    for (size_t r = 1; r < rows.size(); ++r) {
      const auto &f = rows[r].fields;
      const int line = rows[r].line;
      Participant p;
      if (auto id = detail::ParseInt(f[0])) {
        p.id = *id;
      } else {
        detail::FieldError("participant.csv", line, 0, "id", "must be an integer, got \"" + f[0] + "\"");
      }
      if (!seen.insert(p.id).second) {
        detail::FieldError("participant.csv", line, 0, "id",
                           "duplicate participant id " + std::to_string(p.id));
      }
      if (!LanguageCode::FromText(f[1], &p.lang1)) {
        detail::FieldError("participant.csv", line, 1, "lang1",
                           "\"" + f[1] + "\" is not an assigned two-letter language code");
      }
      if (!LanguageCode::FromText(f[2], &p.lang2)) {
        detail::FieldError("participant.csv", line, 2, "lang2",
                           "\"" + f[2] + "\" is not an assigned two-letter language code");
      }
      if (p.lang1 == p.lang2) {
        detail::FieldError("participant.csv", line, 2, "lang2", "lang1 and lang2 must differ");
      }
      auto strength = detail::ParseInt(f[3]);
      if (!strength || *strength < 1 || *strength > 5) {
        detail::FieldError("participant.csv", line, 3, "lang_strength",
                           "must be an integer 1..5, got \"" + f[3] + "\"");
      }
      p.lang_strength = static_cast<int>(*strength);
      p.dialect_note1 = f[4];
      p.dialect_note2 = f[5];
      if (f[6] == "*") {
        p.is_producer = true;
      } else if (f[6].empty()) {
        p.is_producer = false;
      } else {
        detail::FieldError("participant.csv", line, 6, "is_producer",
                           "must be \"*\" or blank, got \"" + f[6] + "\"");
      }
      p.notes = f[7];
      tables.participants.push_back(std::move(p));
    }
  }

  {
    auto rows = detail::LoadRows(dir / "producer.csv", detail::kProducerHeader);
    std::set<int64_t> seen;
    for (size_t r = 1; r < rows.size(); ++r) {
      const auto &f = rows[r].fields;
      const int line = rows[r].line;
      Producer p;
      if (auto id = detail::ParseInt(f[0])) {
        p.id = *id;
      } else {
        detail::FieldError("producer.csv", line, 0, "id", "must be an integer, got \"" + f[0] + "\"");
      }
      if (!seen.insert(p.id).second) {
        detail::FieldError("producer.csv", line, 0, "id",
                           "duplicate producer id " + std::to_string(p.id));
      }
      p.name = f[1];
      tables.producers.push_back(std::move(p));
    }
  }

  {
    auto rows = detail::LoadRows(dir / "conversation.csv", detail::kConversationHeader);
    std::set<std::string> seen;
    auto has_participant = [&](int64_t id) {
      for (const auto &p : tables.participants) {
        if (p.id == id) return true;
      }
      return false;
    };
    auto has_producer = [&](int64_t id) {
      for (const auto &p : tables.producers) {
        if (p.id == id) return true;
      }
      return false;
    };
    for (size_t r = 1; r < rows.size(); ++r) {
      const auto &f = rows[r].fields;
      const int line = rows[r].line;
      ConversationRecord c;
      c.raw_id = f[0];
      if (!seen.insert(detail::FoldCase(f[0])).second) {
        detail::FieldError("conversation.csv", line, 0, "id",
                           "duplicate conversation id \"" + f[0] + "\"");
      }
      c.id = TryParseConversationId(c.raw_id);
      if (!detail::ValidDateShape(f[1])) {
        detail::FieldError("conversation.csv", line, 1, "date",
                           "must be dd_mm_yyyy (day 01-31, month 01-12), got \"" + f[1] + "\"");
      }
      c.date = f[1];
      c.raw_og_re = f[2];
      c.og_re = TryParseOgRe(c.raw_og_re);
      for (size_t i : {3u, 4u, 5u}) {
        static const char *const names[] = {"participant_id_left", "participant_id_right",
                                            "producer_id"};
        auto id = detail::ParseInt(f[i]);
        if (!id) {
          detail::FieldError("conversation.csv", line, i, names[i - 3],
                             "must be an integer, got \"" + f[i] + "\"");
        }
        bool resolves = i == 5 ? has_producer(*id) : has_participant(*id);
        if (!resolves) {
          detail::FieldError("conversation.csv", line, i, names[i - 3],
                             "id " + std::to_string(*id) + " has no row in " +
                                 (i == 5 ? "producer.csv" : "participant.csv"));
        }
        (i == 3 ? c.participant_id_left : i == 4 ? c.participant_id_right : c.producer_id) = *id;
      }
      c.raw_trans_id = f[6];
      tables.conversations.push_back(std::move(c));
    }
  }
  return tables;
}

// ---------------------------------------------------------------------------
// Canonical CSV writers. Output is byte-stable: rows sorted by id, language
// codes lowercase, conversation ids uppercase when they parse, LF endings.

inline std::string write_participants_csv(std::vector<Participant> participants) {
  std::sort(participants.begin(), participants.end(),
            [](const Participant &a, const Participant &b) { return a.id < b.id; });
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "lang1", "lang2", "lang_strength", "dialect_note1", "dialect_note2",
                  "is_producer", "notes"});
  for (const auto &p : participants) {
    rows.push_back({std::to_string(p.id), p.lang1.lower(), p.lang2.lower(),
                    std::to_string(p.lang_strength), p.dialect_note1, p.dialect_note2,
                    p.is_producer ? "*" : "", p.notes});
  }
  return csv::Write(rows);
}

inline std::string write_producers_csv(std::vector<Producer> producers) {
  std::sort(producers.begin(), producers.end(),
            [](const Producer &a, const Producer &b) { return a.id < b.id; });
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "name"});
  for (const auto &p : producers) rows.push_back({std::to_string(p.id), p.name});
  return csv::Write(rows);
}

inline std::string write_conversations_csv(std::vector<ConversationRecord> conversations) {
  std::sort(conversations.begin(), conversations.end(),
            [](const ConversationRecord &a, const ConversationRecord &b) {
              return a.Stem() < b.Stem();
            });
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "date", "original_or_reenacted", "participant_id_left",
                  "participant_id_right", "producer_id", "trans_id"});
  for (const auto &c : conversations) {
    std::string trans = c.raw_trans_id;
    if (auto parsed = TryParseConversationId(trans)) trans = parsed->Canonical();
    rows.push_back({c.Stem(), c.date, c.raw_og_re, std::to_string(c.participant_id_left),
                    std::to_string(c.participant_id_right), std::to_string(c.producer_id),
                    trans});
  }
  return csv::Write(rows);
}

// ---------------------------------------------------------------------------
// Discovery.

namespace detail {

// Conversation stems become path components; refuse anything that could
// escape the recordings directory.
inline bool SafePathStem(std::string_view stem) {
  if (stem.empty() || stem == "." || stem == "..") return false;
  for (char c : stem) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

// Scans `recordings_dir` for each conversation's markup and audio. A stereo
// recording is `<STEM>.wav`; a dual-mono recording is a folder `<STEM>/`
// holding `<participant_id_left>.wav` and `<participant_id_right>.wav`.
// Markup is `<STEM>.eaf`, or `<STEM>/<STEM>.eaf` next to dual-mono tracks.
// Absence is recorded, not fatal; validation reports it.
inline Corpus discover_corpus(const std::filesystem::path &recordings_dir,
                              const std::filesystem::path &metadata_dir) {
  namespace fs = std::filesystem;
  MetadataTables tables = load_metadata(metadata_dir);
  Corpus corpus;
  corpus.recordings_dir = recordings_dir;
  corpus.participants = std::move(tables.participants);
  corpus.producers = std::move(tables.producers);
  corpus.conversations = std::move(tables.conversations);

  std::error_code ec;
  if (!fs::is_directory(recordings_dir, ec)) {
    throw IoError("recordings directory " + recordings_dir.string() + " is not readable");
  }

  for (auto &conv : corpus.conversations) {
    const std::string stem = conv.Stem();
    if (!detail::SafePathStem(stem)) continue;  // cannot map to files; stays absent
    ConversationFiles &files = conv.files;

    fs::path flat_eaf = recordings_dir / (stem + ".eaf");
    fs::path folder = recordings_dir / stem;
    fs::path nested_eaf = folder / (stem + ".eaf");
    if (fs::is_regular_file(flat_eaf, ec)) {
      files.has_markup = true;
      files.markup_path = flat_eaf;
    } else if (fs::is_regular_file(nested_eaf, ec)) {
      files.has_markup = true;
      files.markup_path = nested_eaf;
    }

    fs::path stereo = recordings_dir / (stem + ".wav");
    if (fs::is_regular_file(stereo, ec)) {
      files.layout = AudioLayout::kStereoSingle;
      files.audio_path = stereo;
      continue;
    }
    fs::path left = folder / (std::to_string(conv.participant_id_left) + ".wav");
    fs::path right = folder / (std::to_string(conv.participant_id_right) + ".wav");
    if (fs::is_regular_file(left, ec) && fs::is_regular_file(right, ec)) {
      files.layout = AudioLayout::kDualMono;
      files.audio_path = folder;
      files.left_path = left;
      files.right_path = right;
    }
  }
  return corpus;
}

}  // namespace redial

#endif  // REDIAL_MODEL_HPP_
