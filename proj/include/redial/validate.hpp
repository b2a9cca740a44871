// redial/validate.hpp
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
// Corpus validation: nine stable diagnostic codes with skip/exclude
// semantics. Validation never aborts; it reports, and it decides what the
// release may contain:
//
//   - a conversation-level diagnostic excludes the conversation and its
//     translation partner (a one-sided pair is useless for matched output);
//   - a fragment-level diagnostic excludes that fragment and its possible
//     partner, leaving the rest of the pair intact;
//   - a duplicated markup value excludes every occurrence on both sides with
//     a single diagnostic on the side(s) holding the duplicates.
//
// Diagnostics are deterministic in content and order: sorted by (code,
// subject), with message and hint pure functions of code + subject.

#ifndef REDIAL_VALIDATE_HPP_
#define REDIAL_VALIDATE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "redial/csv.hpp"
#include "redial/eaf.hpp"
#include "redial/model.hpp"
#include "redial/pairing.hpp"

namespace redial {

enum class DiagnosticCode {
  kMissingMarkup,
  kMissingAudio,
  kBadConversationId,
  kBadOgReCode,
  kBadTranslation,
  kBadMarkupValue,
  kBadTier,
  kDuplicateMarkupValue,
  kFragmentTranslationMismatch,
};

inline constexpr int kDiagnosticCodeCount = 9;

inline std::string_view ToText(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kMissingMarkup: return "MISSING_MARKUP";
    case DiagnosticCode::kMissingAudio: return "MISSING_AUDIO";
    case DiagnosticCode::kBadConversationId: return "BAD_CONVERSATION_ID";
    case DiagnosticCode::kBadOgReCode: return "BAD_OG_RE_CODE";
    case DiagnosticCode::kBadTranslation: return "BAD_TRANSLATION";
    case DiagnosticCode::kBadMarkupValue: return "BAD_MARKUP_VALUE";
    case DiagnosticCode::kBadTier: return "BAD_TIER";
    case DiagnosticCode::kDuplicateMarkupValue: return "DUPLICATE_MARKUP_VALUE";
    case DiagnosticCode::kFragmentTranslationMismatch: return "FRAGMENT_TRANSLATION_MISMATCH";
  }
  return "UNKNOWN";
}

// True for the five codes that condemn a whole conversation (and its
// partner); false for the four that condemn a single markup value or tier.
inline bool IsConversationLevel(DiagnosticCode code) {
  return code <= DiagnosticCode::kBadTranslation;
}

// What a diagnostic is about: a conversation, optionally narrowed to a tier
// and further to a markup value.
struct DiagnosticSubject {
  std::string conversation;  // stem text, e.g. "EN_001" (or the raw bad id)
  std::string tier;          // empty for conversation-level codes
  std::string value;         // empty for BAD_TIER and conversation-level codes

  std::string Text() const {
    std::string out = conversation;
    if (!tier.empty()) out += "/" + tier;
    if (!value.empty()) out += "/" + value;
    return out;
  }

  friend bool operator==(const DiagnosticSubject &a, const DiagnosticSubject &b) {
    return a.conversation == b.conversation && a.tier == b.tier && a.value == b.value;
  }
  friend bool operator<(const DiagnosticSubject &a, const DiagnosticSubject &b) {
    return std::tie(a.conversation, a.tier, a.value) < std::tie(b.conversation, b.tier, b.value);
  }
};

struct Diagnostic {
  DiagnosticCode code;
  DiagnosticSubject subject;
  std::string message;
  std::string hint;
};

// Identifies all annotations of one canonical (or, for grammar-bad values,
// verbatim) value within one tier of one conversation.
struct FragmentKey {
  std::string conversation;  // stem
  std::string tier;
  std::string value;

  friend bool operator==(const FragmentKey &a, const FragmentKey &b) {
    return a.conversation == b.conversation && a.tier == b.tier && a.value == b.value;
  }
  friend bool operator<(const FragmentKey &a, const FragmentKey &b) {
    return std::tie(a.conversation, a.tier, a.value) < std::tie(b.conversation, b.tier, b.value);
  }
};

// Key for an annotation as validation tracks it: canonical when the value
// parses, verbatim otherwise (grammar-bad values have no canonical form).
inline FragmentKey MakeFragmentKey(std::string_view stem, std::string_view tier,
                                   std::string_view value) {
  return FragmentKey{std::string(stem), std::string(tier),
                     IsMarkupValue(value) ? CanonicalMarkupValue(value) : std::string(value)};
}

struct ValidationResult {
  std::vector<Diagnostic> diagnostics;           // sorted by (code, subject)
  std::set<std::string> excluded_conversations;  // stems
  std::set<FragmentKey> excluded_fragments;
  // Surviving mutual-translation pairs as (og index, re index) into
  // corpus.conversations, sorted by the OG stem.
  std::vector<std::pair<size_t, size_t>> surviving_pairs;

  bool HasCode(DiagnosticCode code) const {
    for (const auto &d : diagnostics) {
      if (d.code == code) return true;
    }
    return false;
  }
  int CountCode(DiagnosticCode code) const {
    int n = 0;
    for (const auto &d : diagnostics) n += d.code == code ? 1 : 0;
    return n;
  }
};

namespace detail {

inline std::string DiagnosticMessage(DiagnosticCode code, const DiagnosticSubject &s) {
  switch (code) {
    case DiagnosticCode::kMissingMarkup:
      return "conversation " + s.conversation + " has no markup file " + s.conversation + ".eaf";
    case DiagnosticCode::kMissingAudio:
      return "conversation " + s.conversation + " has no audio: neither " + s.conversation +
             ".wav nor a complete dual-mono folder " + s.conversation + "/";
    case DiagnosticCode::kBadConversationId:
      return "conversation id \"" + s.conversation +
             "\" is not <language code>_<three digits>";
    case DiagnosticCode::kBadOgReCode:
      return "conversation " + s.conversation +
             " has an original_or_reenacted code other than OG or RE";
    case DiagnosticCode::kBadTranslation:
      return "conversation " + s.conversation +
             " does not have exactly one translation (same three digits, different language, "
             "opposite OG/RE code)";
    case DiagnosticCode::kBadMarkupValue:
      return "markup value \"" + s.value + "\" in tier " + s.tier + " of " + s.conversation +
             " does not match #?digits(.digits)?";
    case DiagnosticCode::kBadTier:
      return "tier \"" + s.tier + "\" in " + s.conversation +
             " is not one of Utterance, LittleLeft, LittleRight";
    case DiagnosticCode::kDuplicateMarkupValue:
      return "markup value " + s.value + " appears more than once in tier " + s.tier + " of " +
             s.conversation;
    case DiagnosticCode::kFragmentTranslationMismatch:
      return "fragment " + s.value + " in tier " + s.tier + " of " + s.conversation +
             " has no unique same-value partner in the translation's " + s.tier + " tier";
  }
  return "";
}

inline std::string DiagnosticHint(DiagnosticCode code, const DiagnosticSubject &s) {
  switch (code) {
    case DiagnosticCode::kMissingMarkup:
      return "add recordings/" + s.conversation + ".eaf (or recordings/" + s.conversation + "/" +
             s.conversation + ".eaf), or drop the conversation.csv row";
    case DiagnosticCode::kMissingAudio:
      return "add recordings/" + s.conversation + ".wav, or a folder recordings/" +
             s.conversation + "/ with one wav per participant id";
    case DiagnosticCode::kBadConversationId:
      return "rename like EN_001: an assigned two-letter language code, an underscore, exactly "
             "three digits";
    case DiagnosticCode::kBadOgReCode:
      return "set original_or_reenacted to OG (original) or RE (re-enacted)";
    case DiagnosticCode::kBadTranslation:
      return "record or fix the partner conversation so " + s.conversation +
             " pairs with exactly one translation";
    case DiagnosticCode::kBadMarkupValue:
      return "use digits with an optional leading # and an optional dotted suffix (e.g. #12 or "
             "3.34); DELETE is recognized only in the Utterance tier";
    case DiagnosticCode::kBadTier:
      return "rename or remove the tier; only Utterance, LittleLeft, and LittleRight are "
             "released";
    case DiagnosticCode::kDuplicateMarkupValue:
      return "markup values must be unique within a tier; renumber the duplicates";
    case DiagnosticCode::kFragmentTranslationMismatch:
      return "give the fragment and its translation equal values in same-named tiers, or remove "
             "it";
  }
  return "";
}

}  // namespace detail

inline Diagnostic MakeDiagnostic(DiagnosticCode code, DiagnosticSubject subject) {
  Diagnostic d;
  d.code = code;
  d.message = detail::DiagnosticMessage(code, subject);
  d.hint = detail::DiagnosticHint(code, subject);
  d.subject = std::move(subject);
  return d;
}

// Validates the corpus against the full taxonomy. `markups` is keyed by
// conversation stem and must hold a parsed document for every conversation
// whose markup file was found.
inline ValidationResult validate_corpus(const Corpus &corpus,
                                        const std::map<std::string, MarkupDocument> &markups) {
  ValidationResult result;
  std::set<std::pair<int, DiagnosticSubject>> seen;  // (code order, subject)

  auto emit = [&](DiagnosticCode code, DiagnosticSubject subject) {
    if (!seen.insert({static_cast<int>(code), subject}).second) return;
    result.diagnostics.push_back(MakeDiagnostic(code, std::move(subject)));
  };

  // --- Conversation-level checks (the first five diagnostic codes). ---
  for (const auto &conv : corpus.conversations) {
    const std::string stem = conv.Stem();
    std::vector<DiagnosticCode> codes;
    if (!conv.files.has_markup) codes.push_back(DiagnosticCode::kMissingMarkup);
    if (conv.files.layout == AudioLayout::kNone) codes.push_back(DiagnosticCode::kMissingAudio);
    if (!conv.id) codes.push_back(DiagnosticCode::kBadConversationId);
    if (!conv.og_re) codes.push_back(DiagnosticCode::kBadOgReCode);

    TranslationResult translation = find_translation(conv, corpus);
    if (conv.id && conv.og_re && translation.outcome != TranslationOutcome::kFound) {
      codes.push_back(DiagnosticCode::kBadTranslation);
    }
    if (codes.empty()) continue;
    for (DiagnosticCode code : codes) emit(code, DiagnosticSubject{stem, "", ""});
    result.excluded_conversations.insert(stem);
    // A condemned conversation takes its partner (or, when ambiguous, every
    // candidate) with it: none of them can form a matched pair any more.
    for (const ConversationRecord *candidate : translation.candidates) {
      result.excluded_conversations.insert(candidate->Stem());
    }
  }

  // --- Per-document checks: value grammar, tier names, duplicates. ---
  for (const auto &conv : corpus.conversations) {
    const std::string stem = conv.Stem();
    auto doc_it = markups.find(stem);
    if (!conv.files.has_markup || doc_it == markups.end()) continue;
    const MarkupDocument &doc = doc_it->second;
    for (const auto &tier : doc.tiers) {
      if (!IsKnownTier(tier.name)) {
        emit(DiagnosticCode::kBadTier, DiagnosticSubject{stem, tier.name, ""});
        continue;
      }
      std::map<std::string, int> canonical_counts;
      for (const auto &ann : tier.annotations) {
        if (tier.name == kUtteranceTier && ann.value == kDeleteDirective) continue;
        if (!IsMarkupValue(ann.value)) {
          emit(DiagnosticCode::kBadMarkupValue, DiagnosticSubject{stem, tier.name, ann.value});
          result.excluded_fragments.insert(MakeFragmentKey(stem, tier.name, ann.value));
          continue;
        }
        ++canonical_counts[CanonicalMarkupValue(ann.value)];
      }
      for (const auto &[value, count] : canonical_counts) {
        if (count < 2) continue;
        emit(DiagnosticCode::kDuplicateMarkupValue, DiagnosticSubject{stem, tier.name, value});
        result.excluded_fragments.insert(FragmentKey{stem, tier.name, value});
      }
    }
  }

  // --- Surviving pairs. ---
  for (size_t i = 0; i < corpus.conversations.size(); ++i) {
    const auto &conv = corpus.conversations[i];
    if (!conv.id || !conv.og_re || *conv.og_re != OgRe::kOriginal) continue;
    if (result.excluded_conversations.count(conv.Stem())) continue;
    TranslationResult translation = find_translation(conv, corpus);
    if (translation.outcome != TranslationOutcome::kFound) continue;
    const ConversationRecord *partner = translation.partner();
    if (result.excluded_conversations.count(partner->Stem())) continue;
    size_t j = static_cast<size_t>(partner - corpus.conversations.data());
    result.surviving_pairs.emplace_back(i, j);
  }
  std::sort(result.surviving_pairs.begin(), result.surviving_pairs.end(),
            [&](const auto &a, const auto &b) {
              return corpus.conversations[a.first].Stem() < corpus.conversations[b.first].Stem();
            });

  // --- Cross-side checks per surviving pair: duplicates condemn the value on
  // both sides silently; a value present on exactly one side is a mismatch.
  for (const auto &[og_index, re_index] : result.surviving_pairs) {
    const auto &og_conv = corpus.conversations[og_index];
    const auto &re_conv = corpus.conversations[re_index];
    const std::string og_stem = og_conv.Stem();
    const std::string re_stem = re_conv.Stem();
    auto og_doc = markups.find(og_stem);
    auto re_doc = markups.find(re_stem);
    if (og_doc == markups.end() || re_doc == markups.end()) continue;

    for (std::string_view tier_name : {kUtteranceTier, kLittleLeftTier, kLittleRightTier}) {
      auto counts = [&](const MarkupDocument &doc) {
        std::map<std::string, int> out;
        const Tier *tier = doc.FindTier(tier_name);
        if (!tier) return out;
        for (const auto &ann : tier->annotations) {
          if (tier_name == kUtteranceTier && ann.value == kDeleteDirective) continue;
          if (!IsMarkupValue(ann.value)) continue;
          ++out[CanonicalMarkupValue(ann.value)];
        }
        return out;
      };
      std::map<std::string, int> og_counts = counts(og_doc->second);
      std::map<std::string, int> re_counts = counts(re_doc->second);
      std::set<std::string> values;
      for (const auto &[v, _] : og_counts) values.insert(v);
      for (const auto &[v, _] : re_counts) values.insert(v);
      for (const auto &v : values) {
        int og_n = og_counts.count(v) ? og_counts[v] : 0;
        int re_n = re_counts.count(v) ? re_counts[v] : 0;
        if (og_n >= 2 || re_n >= 2) {
          // Duplicate diagnostics were already emitted per document; here the
          // value is condemned on both sides so no half-pair leaks out.
          result.excluded_fragments.insert(FragmentKey{og_stem, std::string(tier_name), v});
          result.excluded_fragments.insert(FragmentKey{re_stem, std::string(tier_name), v});
        } else if (og_n == 1 && re_n == 0) {
          emit(DiagnosticCode::kFragmentTranslationMismatch,
               DiagnosticSubject{og_stem, std::string(tier_name), v});
          result.excluded_fragments.insert(FragmentKey{og_stem, std::string(tier_name), v});
        } else if (og_n == 0 && re_n == 1) {
          emit(DiagnosticCode::kFragmentTranslationMismatch,
               DiagnosticSubject{re_stem, std::string(tier_name), v});
          result.excluded_fragments.insert(FragmentKey{re_stem, std::string(tier_name), v});
        }
      }
    }
  }

  std::sort(result.diagnostics.begin(), result.diagnostics.end(),
            [](const Diagnostic &a, const Diagnostic &b) {
              if (a.code != b.code) return a.code < b.code;
              return a.subject < b.subject;
            });
  return result;
}

// One human-readable line, e.g.
// "warning MISSING_AUDIO EN_001: conversation EN_001 has no audio ... (add ...)".
inline std::string render_human(const Diagnostic &d) {
  return "warning " + std::string(ToText(d.code)) + " " + d.subject.Text() + ": " + d.message +
         " (" + d.hint + ")";
}

// Machine-readable report: one CSV row per diagnostic, in report order.
inline std::string render_report_csv(const std::vector<Diagnostic> &diagnostics) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"code", "subject", "message", "hint"});
  for (const auto &d : diagnostics) {
    rows.push_back({std::string(ToText(d.code)), d.subject.Text(), d.message, d.hint});
  }
  return csv::Write(rows);
}

}  // namespace redial

#endif  // REDIAL_VALIDATE_HPP_
