// redial/testkit.hpp
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
// Synthetic fixtures and the independent oracle. A FixtureSpec describes a
// corpus; make_fixture writes it to disk as an ordinary input tree
// (tone-coded stereo WAVs, serialized markup, metadata CSVs), materialize
// builds the same corpus in memory, inject_fault derives a minimally broken
// variant per diagnostic code, and oracle_expectation recomputes pairs,
// exclusions, and statistics by brute force without touching the pairing or
// validation code paths.

#ifndef REDIAL_TESTKIT_HPP_
#define REDIAL_TESTKIT_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redial/audio.hpp"
#include "redial/eaf.hpp"
#include "redial/io.hpp"
#include "redial/model.hpp"
#include "redial/pairing.hpp"
#include "redial/release.hpp"
#include "redial/validate.hpp"

namespace redial {

struct AnnotationPlan {
  std::string tier;
  std::string value;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
};

struct ConversationPlan {
  std::string id_text;     // written verbatim to conversation.csv
  std::string og_re_text;  // "OG" / "RE" (or an injected bad code)
  std::string date = "05_11_2022";
  int64_t participant_left = 0;
  int64_t participant_right = 0;
  int64_t producer = 0;
  std::vector<AnnotationPlan> annotations;
  bool write_markup = true;
  bool write_audio = true;
  bool dual_mono = false;     // folder with one mono wav per participant
  int64_t audio_ms = 4000;    // recording length
  double left_tone_hz = 440.0;
  double right_tone_hz = 660.0;
};

struct FixtureSpec {
  uint64_t seed = 0;
  std::vector<Participant> participants;
  std::vector<Producer> producers;
  std::vector<ConversationPlan> conversations;
};

inline constexpr int kFixtureSampleRate = 44100;

// ---------------------------------------------------------------------------
// Spec construction.

namespace testdetail {

inline Participant MakeParticipant(int64_t id, std::string_view lang1, std::string_view lang2) {
  Participant p;
  p.id = id;
  LanguageCode::FromText(lang1, &p.lang1);
  LanguageCode::FromText(lang2, &p.lang2);
  p.lang_strength = 3;
  return p;
}

}  // namespace testdetail

// One clean OG/RE pair with a single long fragment each; the smallest spec
// that builds a non-empty release.
inline FixtureSpec minimal_spec() {
  FixtureSpec spec;
  spec.participants = {testdetail::MakeParticipant(1, "en", "es"),
                       testdetail::MakeParticipant(2, "en", "es")};
  spec.producers = {Producer{1, "Operator"}};
  ConversationPlan og;
  og.id_text = "EN_001";
  og.og_re_text = "OG";
  og.participant_left = 1;
  og.participant_right = 2;
  og.producer = 1;
  og.annotations = {{"Utterance", "#1", 500, 1800}};
  ConversationPlan re = og;
  re.id_text = "ES_001";
  re.og_re_text = "RE";
  re.annotations = {{"Utterance", "1", 700, 2100}};
  spec.conversations = {og, re};
  return spec;
}

// Seeded generator for property tests. Value pools are kept small so
// duplicates, one-sided values, and cross-pair id collisions (ambiguous
// translations) all occur naturally; DELETE spans appear in roughly a
// quarter of Utterance tiers. Dotted values stay off unless requested.
inline FixtureSpec random_spec(uint64_t seed, int max_annotations_per_tier = 20,
                               bool allow_dotted = false) {
  static const char *const kLangPool[] = {"en", "es", "de", "fr", "ja", "bn", "pt", "ru"};
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
  auto rand_int = [&](int lo, int hi) {
    return static_cast<int>(std::uniform_int_distribution<>(lo, hi)(rng));
  };

  FixtureSpec spec;
  spec.seed = seed;
  spec.producers = {Producer{1, "Operator"}};

  const int pairs = rand_int(1, 2);
  int64_t next_participant = 1;
  // Languages are drawn without replacement so conversation stems stay
  // unique; colliding numbers across pairs are allowed on purpose, because
  // same digits across different languages make translations ambiguous.
  std::vector<int> langs_left = {0, 1, 2, 3, 4, 5, 6, 7};
  for (int p = 0; p < pairs; ++p) {
    int pick = rand_int(0, static_cast<int>(langs_left.size()) - 1);
    const int lang_a = langs_left[pick];
    langs_left.erase(langs_left.begin() + pick);
    pick = rand_int(0, static_cast<int>(langs_left.size()) - 1);
    const int lang_b = langs_left[pick];
    langs_left.erase(langs_left.begin() + pick);
    int number = rand_int(1, 3);
    int64_t left = next_participant++;
    int64_t right = next_participant++;
    spec.participants.push_back(
        testdetail::MakeParticipant(left, kLangPool[lang_a], kLangPool[lang_b]));
    spec.participants.push_back(
        testdetail::MakeParticipant(right, kLangPool[lang_b], kLangPool[lang_a]));

    for (int member = 0; member < 2; ++member) {
      ConversationPlan conv;
      char id[8];
      std::snprintf(id, sizeof(id), "%c%c_%03d",
                    std::toupper(kLangPool[member == 0 ? lang_a : lang_b][0]),
                    std::toupper(kLangPool[member == 0 ? lang_a : lang_b][1]), number);
      conv.id_text = id;
      conv.og_re_text = member == 0 ? "OG" : "RE";
      conv.participant_left = left;
      conv.participant_right = right;
      conv.producer = 1;
      conv.audio_ms = 2000 + rand_int(0, 2000);
      conv.dual_mono = rand_int(0, 4) == 0;
      auto plan_tier = [&](std::string_view tier, int value_pool, int cap) {
        int count = rand_int(0, cap);
        for (int i = 0; i < count; ++i) {
          AnnotationPlan ann;
          ann.tier = tier;
          int v = rand_int(1, value_pool);
          std::string value = std::to_string(v);
          if (allow_dotted && rand_int(0, 5) == 0) value += "." + std::to_string(rand_int(1, 9));
          if (rand_int(0, 1) == 0) value.insert(value.begin(), '#');
          ann.value = value;
          int64_t len = rand_int(50, 900);
          ann.start_ms = rand_int(0, static_cast<int>(conv.audio_ms - len));
          ann.end_ms = ann.start_ms + len;
          conv.annotations.push_back(std::move(ann));
        }
      };
      // DELETE spans share the Utterance tier, so its cap leaves room for
      // them; every tier stays within max_annotations_per_tier.
      plan_tier(kUtteranceTier, 9, std::max(0, max_annotations_per_tier - 2));
      plan_tier(kLittleLeftTier, 6, max_annotations_per_tier);
      plan_tier(kLittleRightTier, 6, max_annotations_per_tier);
      if (rand_int(0, 3) == 0) {
        int deletes = rand_int(1, 2);
        for (int i = 0; i < deletes; ++i) {
          int64_t len = rand_int(100, 600);
          int64_t start = rand_int(0, static_cast<int>(conv.audio_ms - len));
          conv.annotations.push_back(
              AnnotationPlan{std::string(kUtteranceTier), std::string(kDeleteDirective), start,
                             start + len});
        }
      }
      spec.conversations.push_back(std::move(conv));
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Fault injection: the returned spec differs minimally from the input and
// validates with exactly the requested code.

inline FixtureSpec inject_fault(FixtureSpec spec, DiagnosticCode kind) {
  auto add_standalone = [&](const char *id_text, const char *og_re,
                            std::vector<AnnotationPlan> annotations) {
    ConversationPlan conv;
    conv.id_text = id_text;
    conv.og_re_text = og_re;
    conv.participant_left = spec.participants.front().id;
    conv.participant_right = spec.participants.at(1).id;
    conv.producer = spec.producers.front().id;
    conv.annotations = std::move(annotations);
    spec.conversations.push_back(std::move(conv));
  };
  // Faulty pairs get numbers from 900 up so they never collide with the
  // numbers random_spec hands out.
  switch (kind) {
    case DiagnosticCode::kMissingMarkup:
      spec.conversations.front().write_markup = false;
      break;
    case DiagnosticCode::kMissingAudio:
      spec.conversations.front().write_audio = false;
      break;
    case DiagnosticCode::kBadConversationId:
      add_standalone("EN_9", "OG", {});
      break;
    case DiagnosticCode::kBadOgReCode:
      add_standalone("JA_901", "XX", {});
      break;
    case DiagnosticCode::kBadTranslation:
      add_standalone("JA_902", "OG", {});
      break;
    case DiagnosticCode::kBadMarkupValue:
      add_standalone("DE_903", "OG", {{"Utterance", "seven!", 100, 600}});
      add_standalone("FR_903", "RE", {});
      break;
    case DiagnosticCode::kBadTier:
      add_standalone("DE_904", "OG", {{"Default", "1", 100, 600}});
      add_standalone("FR_904", "RE", {});
      break;
    case DiagnosticCode::kDuplicateMarkupValue:
      add_standalone("DE_905", "OG",
                     {{"Utterance", "#7", 100, 600}, {"Utterance", "7", 800, 1300}});
      add_standalone("FR_905", "RE", {{"Utterance", "7", 100, 600}});
      break;
    case DiagnosticCode::kFragmentTranslationMismatch:
      add_standalone("DE_906", "OG", {{"Utterance", "#1", 100, 600}});
      add_standalone("FR_906", "RE", {});
      break;
  }
  return spec;
}

// The conversation pair a fault lands on, by stem, for release assertions.
inline std::vector<std::string> fault_target_stems(const FixtureSpec &clean, DiagnosticCode kind) {
  switch (kind) {
    case DiagnosticCode::kMissingMarkup:
    case DiagnosticCode::kMissingAudio: {
      const auto &victim = clean.conversations.front();
      return {victim.id_text};
    }
    case DiagnosticCode::kBadConversationId:
      return {"EN_9"};
    case DiagnosticCode::kBadOgReCode:
      return {"JA_901"};
    case DiagnosticCode::kBadTranslation:
      return {"JA_902"};
    case DiagnosticCode::kBadMarkupValue:
      return {"DE_903", "FR_903"};
    case DiagnosticCode::kBadTier:
      return {"DE_904", "FR_904"};
    case DiagnosticCode::kDuplicateMarkupValue:
      return {"DE_905", "FR_905"};
    case DiagnosticCode::kFragmentTranslationMismatch:
      return {"DE_906", "FR_906"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Materialization, in memory and on disk.

namespace testdetail {

inline MarkupDocument BuildMarkupDocument(const ConversationPlan &plan) {
  MarkupDocument doc;
  doc.media_descriptors = {plan.id_text + ".wav"};
  for (const auto &ann : plan.annotations) {
    Tier *tier = nullptr;
    for (auto &t : doc.tiers) {
      if (t.name == ann.tier) tier = &t;
    }
    if (!tier) {
      doc.tiers.push_back(Tier{ann.tier, {}});
      tier = &doc.tiers.back();
    }
    tier->annotations.push_back(Annotation{ann.value, ann.start_ms, ann.end_ms});
  }
  for (auto &tier : doc.tiers) detail::SortAnnotations(&tier.annotations);
  return doc;
}

inline ConversationRecord BuildRecord(const ConversationPlan &plan) {
  ConversationRecord conv;
  conv.raw_id = plan.id_text;
  conv.date = plan.date;
  conv.raw_og_re = plan.og_re_text;
  conv.participant_id_left = plan.participant_left;
  conv.participant_id_right = plan.participant_right;
  conv.producer_id = plan.producer;
  conv.id = TryParseConversationId(plan.id_text);
  conv.og_re = TryParseOgRe(plan.og_re_text);
  return conv;
}

inline WavBuffer SynthTone(int64_t duration_ms, double left_hz, double right_hz) {
  WavBuffer buf;
  buf.sample_rate = kFixtureSampleRate;
  buf.channels = 2;
  const int64_t frames = ms_to_sample(duration_ms, kFixtureSampleRate);
  buf.samples.resize(static_cast<size_t>(frames) * 2);
  constexpr double kAmplitude = 8000.0;
  constexpr double kTau = 6.283185307179586;
  for (int64_t i = 0; i < frames; ++i) {
    double t = static_cast<double>(i) / kFixtureSampleRate;
    buf.samples[2 * i] = static_cast<int16_t>(std::lrint(kAmplitude * std::sin(kTau * left_hz * t)));
    buf.samples[2 * i + 1] =
        static_cast<int16_t>(std::lrint(kAmplitude * std::sin(kTau * right_hz * t)));
  }
  return buf;
}

}  // namespace testdetail

// Builds the corpus in memory, exactly as load_corpus would see it from a
// make_fixture tree (markup round-trips through the serializer).
inline LoadedCorpus materialize(const FixtureSpec &spec) {
  LoadedCorpus loaded;
  loaded.corpus.participants = spec.participants;
  loaded.corpus.producers = spec.producers;
  for (const auto &plan : spec.conversations) {
    ConversationRecord conv = testdetail::BuildRecord(plan);
    conv.files.has_markup = plan.write_markup;
    conv.files.layout = plan.write_audio
                            ? (plan.dual_mono ? AudioLayout::kDualMono : AudioLayout::kStereoSingle)
                            : AudioLayout::kNone;
    if (plan.write_markup) {
      loaded.markups[conv.Stem()] =
          parse_eaf(serialize_eaf(testdetail::BuildMarkupDocument(plan)));
    }
    loaded.corpus.conversations.push_back(std::move(conv));
  }
  return loaded;
}

// Writes the spec to `dir` as an ordinary corpus input tree. Deterministic:
// the same spec yields a byte-identical tree.
inline std::filesystem::path make_fixture(const FixtureSpec &spec,
                                          const std::filesystem::path &dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "recordings");

  WriteFile(dir / "participant.csv", write_participants_csv(spec.participants));
  WriteFile(dir / "producer.csv", write_producers_csv(spec.producers));
  std::vector<ConversationRecord> records;
  for (const auto &plan : spec.conversations) records.push_back(testdetail::BuildRecord(plan));
  WriteFile(dir / "conversation.csv", write_conversations_csv(std::move(records)));

  for (const auto &plan : spec.conversations) {
    const std::string stem = testdetail::BuildRecord(plan).Stem();
    if (plan.write_markup) {
      WriteFile(dir / "recordings" / (stem + ".eaf"),
                serialize_eaf(testdetail::BuildMarkupDocument(plan)));
    }
    if (!plan.write_audio) continue;
    WavBuffer stereo = testdetail::SynthTone(plan.audio_ms, plan.left_tone_hz, plan.right_tone_hz);
    if (plan.dual_mono) {
      fs::create_directories(dir / "recordings" / stem);
      WriteFile(dir / "recordings" / stem /
                    (std::to_string(plan.participant_left) + ".wav"),
                write_wav(extract_channel(stereo, Channel::kLeft)));
      WriteFile(dir / "recordings" / stem /
                    (std::to_string(plan.participant_right) + ".wav"),
                write_wav(extract_channel(stereo, Channel::kRight)));
    } else {
      WriteFile(dir / "recordings" / (stem + ".wav"), write_wav(stereo));
    }
  }
  return dir;
}

// ---------------------------------------------------------------------------
// The oracle: a quadratic recomputation of what validation, redaction,
// pairing, and stats must produce, sharing no logic with those modules.

struct OracleExpectation {
  // Released pairs as "OG_STEM|RE_STEM|tier|canonical_value".
  std::set<std::string> pair_keys;
  std::set<std::string> excluded_conversations;         // stems
  std::set<std::string> excluded_fragment_keys;         // "STEM|tier|value"
  int64_t long_pairs = 0;
  int64_t short_pairs = 0;
  double mean_long_s = 0.0;   // rounded to one decimal
  double mean_short_s = 0.0;  // rounded to one decimal
  int64_t conversations = 0;  // conversations contributing at least one pair
  int64_t participants = 0;   // distinct participant ids over those
};

namespace testdetail {

// The oracle's own value grammar, written differently from the library's.
inline bool OracleValueOk(const std::string &v) {
  size_t i = v.size() && v[0] == '#' ? 1 : 0;
  size_t j = v.find('.', i);
  auto all_digits = [&](size_t lo, size_t hi) {
    if (lo >= hi) return false;
    for (size_t k = lo; k < hi; ++k) {
      if (!isdigit(static_cast<unsigned char>(v[k]))) return false;
    }
    return true;
  };
  if (j == std::string::npos) return all_digits(i, v.size());
  return all_digits(i, j) && all_digits(j + 1, v.size());
}

inline std::string OracleCanonical(const std::string &v) {
  return v.size() && v[0] == '#' ? v.substr(1) : v;
}

// Oracle id check against the generator's own language pool plus the two
// languages the bundled examples use, avoiding the library's ISO table.
inline bool OracleIdOk(const std::string &id, std::string *lang, int *number) {
  static const std::set<std::string> kKnown = {"en", "es", "de", "fr", "ja", "bn", "pt", "ru"};
  if (id.size() != 6 || id[2] != '_') return false;
  std::string l;
  l += static_cast<char>(tolower(static_cast<unsigned char>(id[0])));
  l += static_cast<char>(tolower(static_cast<unsigned char>(id[1])));
  if (!isalpha(static_cast<unsigned char>(id[0])) || !isalpha(static_cast<unsigned char>(id[1])))
    return false;
  if (!kKnown.count(l)) return false;
  for (int i = 3; i < 6; ++i) {
    if (!isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  *lang = l;
  *number = (id[3] - '0') * 100 + (id[4] - '0') * 10 + (id[5] - '0');
  return true;
}

}  // namespace testdetail

inline OracleExpectation oracle_expectation(const FixtureSpec &spec) {
  using testdetail::OracleCanonical;
  using testdetail::OracleIdOk;
  using testdetail::OracleValueOk;
  OracleExpectation ex;
  const auto &convs = spec.conversations;
  const size_t n = convs.size();

  struct Parsed {
    bool id_ok = false;
    std::string lang;
    int number = 0;
    bool og_ok = false;
    bool is_og = false;
    std::string stem;
  };
  std::vector<Parsed> parsed(n);
  for (size_t i = 0; i < n; ++i) {
    Parsed &p = parsed[i];
    p.id_ok = OracleIdOk(convs[i].id_text, &p.lang, &p.number);
    p.og_ok = convs[i].og_re_text == "OG" || convs[i].og_re_text == "RE";
    p.is_og = convs[i].og_re_text == "OG";
    p.stem = convs[i].id_text;  // generator ids are already canonical
  }

  // Translation candidates, brute force.
  auto candidates_of = [&](size_t i) {
    std::vector<size_t> out;
    if (!parsed[i].id_ok || !parsed[i].og_ok) return out;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || !parsed[j].id_ok || !parsed[j].og_ok) continue;
      if (parsed[j].number != parsed[i].number) continue;
      if (parsed[j].lang == parsed[i].lang) continue;
      if (parsed[j].is_og == parsed[i].is_og) continue;
      out.push_back(j);
    }
    return out;
  };

  // Conversation-level faults and their partner exclusions.
  for (size_t i = 0; i < n; ++i) {
    bool faulty = !convs[i].write_markup || !convs[i].write_audio || !parsed[i].id_ok ||
                  !parsed[i].og_ok;
    std::vector<size_t> cands = candidates_of(i);
    if (parsed[i].id_ok && parsed[i].og_ok && cands.size() != 1) faulty = true;
    if (!faulty) continue;
    ex.excluded_conversations.insert(parsed[i].stem);
    for (size_t j : cands) ex.excluded_conversations.insert(parsed[j].stem);
  }

  // Per-document exclusions: bad values verbatim, duplicates canonically.
  auto tier_values = [&](size_t i, std::string_view tier) {
    std::vector<const AnnotationPlan *> out;
    for (const auto &ann : convs[i].annotations) {
      if (ann.tier != tier) continue;
      if (tier == kUtteranceTier && ann.value == kDeleteDirective) continue;
      out.push_back(&ann);
    }
    return out;
  };
  static const std::string_view kTiers[] = {kUtteranceTier, kLittleLeftTier, kLittleRightTier};
  for (size_t i = 0; i < n; ++i) {
    if (!convs[i].write_markup) continue;
    for (std::string_view tier : kTiers) {
      std::map<std::string, int> counts;
      for (const AnnotationPlan *ann : tier_values(i, tier)) {
        if (!OracleValueOk(ann->value)) {
          ex.excluded_fragment_keys.insert(parsed[i].stem + "|" + std::string(tier) + "|" +
                                           ann->value);
        } else {
          ++counts[OracleCanonical(ann->value)];
        }
      }
      for (const auto &[v, c] : counts) {
        if (c >= 2) {
          ex.excluded_fragment_keys.insert(parsed[i].stem + "|" + std::string(tier) + "|" + v);
        }
      }
    }
  }

  // Surviving pairs, cross-side exclusions, released pairs, and stats.
  std::set<std::string> included_convs;
  std::set<int64_t> included_participants;
  std::vector<int64_t> long_durations;
  std::vector<int64_t> short_durations;
  for (size_t i = 0; i < n; ++i) {
    if (!parsed[i].is_og || !parsed[i].id_ok || !parsed[i].og_ok) continue;
    if (ex.excluded_conversations.count(parsed[i].stem)) continue;
    std::vector<size_t> cands = candidates_of(i);
    if (cands.size() != 1) continue;
    size_t j = cands.front();
    if (ex.excluded_conversations.count(parsed[j].stem)) continue;

    bool any_released = false;
    for (std::string_view tier : kTiers) {
      std::map<std::string, std::vector<const AnnotationPlan *>> og_vals;
      std::map<std::string, std::vector<const AnnotationPlan *>> re_vals;
      for (const AnnotationPlan *ann : tier_values(i, tier)) {
        if (OracleValueOk(ann->value)) og_vals[OracleCanonical(ann->value)].push_back(ann);
      }
      for (const AnnotationPlan *ann : tier_values(j, tier)) {
        if (OracleValueOk(ann->value)) re_vals[OracleCanonical(ann->value)].push_back(ann);
      }
      std::set<std::string> all_values;
      for (const auto &kv : og_vals) all_values.insert(kv.first);
      for (const auto &kv : re_vals) all_values.insert(kv.first);
      for (const auto &v : all_values) {
        size_t og_n = og_vals.count(v) ? og_vals[v].size() : 0;
        size_t re_n = re_vals.count(v) ? re_vals[v].size() : 0;
        if (og_n >= 2 || re_n >= 2) {
          ex.excluded_fragment_keys.insert(parsed[i].stem + "|" + std::string(tier) + "|" + v);
          ex.excluded_fragment_keys.insert(parsed[j].stem + "|" + std::string(tier) + "|" + v);
          continue;
        }
        if (og_n == 1 && re_n == 0) {
          ex.excluded_fragment_keys.insert(parsed[i].stem + "|" + std::string(tier) + "|" + v);
          continue;
        }
        if (og_n == 0 && re_n == 1) {
          ex.excluded_fragment_keys.insert(parsed[j].stem + "|" + std::string(tier) + "|" + v);
          continue;
        }
        // Exactly one on each side: the pair stands unless a DELETE span
        // swallows either member.
        auto redacted = [&](size_t conv_index, const AnnotationPlan *ann) {
          for (const auto &other : convs[conv_index].annotations) {
            if (other.tier != kUtteranceTier || other.value != kDeleteDirective) continue;
            if (std::max(ann->start_ms, other.start_ms) < std::min(ann->end_ms, other.end_ms)) {
              return true;
            }
          }
          return false;
        };
        const AnnotationPlan *og_ann = og_vals[v].front();
        const AnnotationPlan *re_ann = re_vals[v].front();
        if (redacted(i, og_ann) || redacted(j, re_ann)) continue;
        ex.pair_keys.insert(parsed[i].stem + "|" + parsed[j].stem + "|" + std::string(tier) +
                            "|" + v);
        any_released = true;
        if (tier == kUtteranceTier) {
          long_durations.push_back(og_ann->end_ms - og_ann->start_ms);
          long_durations.push_back(re_ann->end_ms - re_ann->start_ms);
        } else {
          short_durations.push_back(og_ann->end_ms - og_ann->start_ms);
          short_durations.push_back(re_ann->end_ms - re_ann->start_ms);
        }
      }
    }
    if (any_released) {
      included_convs.insert(parsed[i].stem);
      included_convs.insert(parsed[j].stem);
      included_participants.insert(convs[i].participant_left);
      included_participants.insert(convs[i].participant_right);
      included_participants.insert(convs[j].participant_left);
      included_participants.insert(convs[j].participant_right);
    }
  }

  auto mean_tenth = [](const std::vector<int64_t> &ms) {
    if (ms.empty()) return 0.0;
    double total = 0;
    for (int64_t d : ms) total += static_cast<double>(d);
    return std::llround(total / static_cast<double>(ms.size()) / 1000.0 * 10.0) / 10.0;
  };
  ex.long_pairs = static_cast<int64_t>(long_durations.size()) / 2;
  ex.short_pairs = static_cast<int64_t>(short_durations.size()) / 2;
  ex.mean_long_s = mean_tenth(long_durations);
  ex.mean_short_s = mean_tenth(short_durations);
  ex.conversations = static_cast<int64_t>(included_convs.size());
  ex.participants = static_cast<int64_t>(included_participants.size());
  return ex;
}

// Maps a fragment pair back to the oracle's key format.
inline std::string pair_key_of(const FragmentPair &pair) {
  std::string_view tier = pair.og.kind == FragmentKind::kLong ? kUtteranceTier
                          : pair.og.side == FragmentSide::kLeft ? kLittleLeftTier
                                                                : kLittleRightTier;
  return pair.og.conv_id.Canonical() + "|" + pair.re.conv_id.Canonical() + "|" +
         std::string(tier) + "|" + pair.og.canonical_value;
}

}  // namespace redial

#endif  // REDIAL_TESTKIT_HPP_
