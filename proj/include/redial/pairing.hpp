// redial/pairing.hpp
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
// Fragments and fragment pairing. A markup document yields LONG fragments
// (Utterance tier, both speakers) and SHORT fragments (LittleLeft /
// LittleRight tiers, one speaker each). Fragments match across a conversation
// and its translation when exactly one fragment on each side carries the same
// canonical markup value in the same-kind, same-side position. Utterance
// annotations valued DELETE are not fragments; they are redaction spans.

#ifndef REDIAL_PAIRING_HPP_
#define REDIAL_PAIRING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "redial/eaf.hpp"
#include "redial/errors.hpp"
#include "redial/model.hpp"

namespace redial {

inline constexpr std::string_view kUtteranceTier = "Utterance";
inline constexpr std::string_view kLittleLeftTier = "LittleLeft";
inline constexpr std::string_view kLittleRightTier = "LittleRight";
inline constexpr std::string_view kDeleteDirective = "DELETE";

inline bool IsKnownTier(std::string_view name) {
  return name == kUtteranceTier || name == kLittleLeftTier || name == kLittleRightTier;
}

// Markup value grammar: optional '#', one or more digits, optional '.' and
// one or more digits. "DELETE" is a directive, not a value.
inline bool IsMarkupValue(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && text[i] == '#') ++i;
  size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == text.size()) return true;
  if (text[i] != '.') return false;
  ++i;
  digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++digits;
  }
  return digits > 0 && i == text.size();
}

// Canonical form: the value verbatim minus a leading '#'.
inline std::string CanonicalMarkupValue(std::string_view text) {
  if (!text.empty() && text.front() == '#') text.remove_prefix(1);
  return std::string(text);
}

enum class FragmentKind { kLong, kShort };
enum class FragmentSide { kLeft, kRight, kMixed };

inline std::string_view ToText(FragmentKind kind) {
  return kind == FragmentKind::kLong ? "LONG" : "SHORT";
}

struct Fragment {
  ConversationId conv_id;
  FragmentKind kind = FragmentKind::kLong;
  FragmentSide side = FragmentSide::kMixed;  // kMixed iff kind == kLong
  std::string canonical_value;
  int64_t start_ms = 0;
  int64_t end_ms = 0;

  friend bool operator==(const Fragment &a, const Fragment &b) {
    return a.conv_id == b.conv_id && a.kind == b.kind && a.side == b.side &&
           a.canonical_value == b.canonical_value && a.start_ms == b.start_ms &&
           a.end_ms == b.end_ms;
  }
};

struct FragmentId {
  LanguageCode lang;
  int conv_number = 0;
  std::string value;

  // Text form, e.g. "ES_008_18" or "ES_002_3.34".
  std::string Text() const {
    return ConversationId{lang, conv_number}.Canonical() + "_" + value;
  }
};

struct FragmentPair {
  Fragment og;
  Fragment re;
};

struct RedactionSpan {
  ConversationId conv_id;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
};

inline FragmentId fragment_id(const Fragment &frag) {
  return FragmentId{frag.conv_id.lang, frag.conv_id.number, frag.canonical_value};
}

// ---------------------------------------------------------------------------
// Extraction.

struct ExtractResult {
  std::vector<Fragment> fragments;
  std::vector<RedactionSpan> redactions;
};

// Turns a validated markup document into fragments and redaction spans.
// Expects validation to have run: excluded annotation values are absent and
// the conversation id parses. Tiers other than the three known ones are
// skipped (validation reported them).
inline ExtractResult extract_fragments(const ConversationRecord &conv, const MarkupDocument &doc) {
  if (!conv.id) {
    throw IdError("conversation \"" + conv.raw_id + "\" has no parseable id");
  }
  ExtractResult result;
  for (const auto &tier : doc.tiers) {
    FragmentKind kind;
    FragmentSide side;
    if (tier.name == kUtteranceTier) {
      kind = FragmentKind::kLong;
      side = FragmentSide::kMixed;
    } else if (tier.name == kLittleLeftTier) {
      kind = FragmentKind::kShort;
      side = FragmentSide::kLeft;
    } else if (tier.name == kLittleRightTier) {
      kind = FragmentKind::kShort;
      side = FragmentSide::kRight;
    } else {
      continue;
    }
    for (const auto &ann : tier.annotations) {
      if (tier.name == kUtteranceTier && ann.value == kDeleteDirective) {
        result.redactions.push_back(RedactionSpan{*conv.id, ann.start_ms, ann.end_ms});
        continue;
      }
      Fragment frag;
      frag.conv_id = *conv.id;
      frag.kind = kind;
      frag.side = side;
      frag.canonical_value = CanonicalMarkupValue(ann.value);
      frag.start_ms = ann.start_ms;
      frag.end_ms = ann.end_ms;
      result.fragments.push_back(std::move(frag));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Redaction filtering.

struct RedactionResult {
  std::vector<Fragment> kept;
  std::vector<Fragment> dropped;
};

// Millisecond intervals [a0,a1) and [b0,b1) overlap by at least one
// millisecond exactly when max(a0,b0) < min(a1,b1).
inline bool OverlapsMs(int64_t a0, int64_t a1, int64_t b0, int64_t b1) {
  return std::max(a0, b0) < std::min(a1, b1);
}

// Drops every fragment whose span overlaps any redaction span by >= 1 ms.
inline RedactionResult apply_redactions(const std::vector<Fragment> &fragments,
                                        const std::vector<RedactionSpan> &redactions) {
  RedactionResult result;
  for (const auto &frag : fragments) {
    bool hit = false;
    for (const auto &span : redactions) {
      if (OverlapsMs(frag.start_ms, frag.end_ms, span.start_ms, span.end_ms)) {
        hit = true;
        break;
      }
    }
    (hit ? result.dropped : result.kept).push_back(frag);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Pairing.

struct PairResult {
  std::vector<FragmentPair> pairs;       // sorted by og.start_ms
  std::vector<Fragment> unmatched;       // og side first, then re side, input order
};

// Matches fragments of two mutually translated conversations. A pair forms
// iff exactly one fragment on each side shares (kind, side, canonical value);
// every other fragment is unmatched. Validation has already reported
// unmatched fragments, so this emits no diagnostics.
inline PairResult pair_fragments(const std::vector<Fragment> &og_frags,
                                 const std::vector<Fragment> &re_frags) {
  using Key = std::tuple<FragmentKind, FragmentSide, std::string>;
  auto key_of = [](const Fragment &f) { return Key{f.kind, f.side, f.canonical_value}; };

  std::map<Key, std::vector<size_t>> og_by_key;
  std::map<Key, std::vector<size_t>> re_by_key;
  for (size_t i = 0; i < og_frags.size(); ++i) og_by_key[key_of(og_frags[i])].push_back(i);
  for (size_t i = 0; i < re_frags.size(); ++i) re_by_key[key_of(re_frags[i])].push_back(i);

  PairResult result;
  std::vector<bool> og_paired(og_frags.size(), false);
  std::vector<bool> re_paired(re_frags.size(), false);
  for (const auto &[key, og_indices] : og_by_key) {
    auto it = re_by_key.find(key);
    if (og_indices.size() != 1 || it == re_by_key.end() || it->second.size() != 1) continue;
    og_paired[og_indices.front()] = true;
    re_paired[it->second.front()] = true;
    result.pairs.push_back(FragmentPair{og_frags[og_indices.front()], re_frags[it->second.front()]});
  }
  std::stable_sort(result.pairs.begin(), result.pairs.end(),
                   [](const FragmentPair &a, const FragmentPair &b) {
                     if (a.og.start_ms != b.og.start_ms) return a.og.start_ms < b.og.start_ms;
                     if (a.og.end_ms != b.og.end_ms) return a.og.end_ms < b.og.end_ms;
                     return a.og.canonical_value < b.og.canonical_value;
                   });
  for (size_t i = 0; i < og_frags.size(); ++i) {
    if (!og_paired[i]) result.unmatched.push_back(og_frags[i]);
  }
  for (size_t i = 0; i < re_frags.size(); ++i) {
    if (!re_paired[i]) result.unmatched.push_back(re_frags[i]);
  }
  return result;
}

}  // namespace redial

#endif  // REDIAL_PAIRING_HPP_
