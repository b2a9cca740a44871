// redial/eaf.hpp
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
// Time-aligned annotation documents (.eaf). Only alignable annotations are
// supported: each annotation references two valued time slots of millisecond
// resolution. Reference annotations and controlled vocabularies are rejected;
// unknown elements and attributes are ignored.

#ifndef REDIAL_EAF_HPP_
#define REDIAL_EAF_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redial/errors.hpp"
#include "redial/xml.hpp"

namespace redial {

struct Annotation {
  std::string value;   // non-empty, no surrounding whitespace
  int64_t start_ms = 0;
  int64_t end_ms = 0;  // start_ms < end_ms

  friend bool operator==(const Annotation &a, const Annotation &b) {
    return a.value == b.value && a.start_ms == b.start_ms && a.end_ms == b.end_ms;
  }
};

struct Tier {
  std::string name;
  std::vector<Annotation> annotations;  // sorted by (start_ms, end_ms)

  friend bool operator==(const Tier &a, const Tier &b) {
    return a.name == b.name && a.annotations == b.annotations;
  }
};

struct MarkupDocument {
  std::vector<std::string> media_descriptors;
  std::vector<Tier> tiers;  // names unique, document order

  const Tier *FindTier(std::string_view name) const {
    for (const auto &t : tiers) {
      if (t.name == name) return &t;
    }
    return nullptr;
  }

  friend bool operator==(const MarkupDocument &a, const MarkupDocument &b) {
    return a.media_descriptors == b.media_descriptors && a.tiers == b.tiers;
  }
};

namespace detail {

inline std::string_view TrimView(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

inline bool ParseMilliseconds(std::string_view text, int64_t *out) {
  if (text.empty()) return false;
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) return false;
  *out = v;
  return true;
}

inline void SortAnnotations(std::vector<Annotation> *annotations) {
  std::stable_sort(annotations->begin(), annotations->end(),
                   [](const Annotation &a, const Annotation &b) {
                     if (a.start_ms != b.start_ms) return a.start_ms < b.start_ms;
                     return a.end_ms < b.end_ms;
                   });
}

}  // namespace detail

// Parses UTF-8 annotation-document XML. Every alignable annotation is
// resolved to absolute (start_ms, end_ms); values keep internal whitespace
// but are trimmed of surrounding whitespace. Tiers come back in document
// order with annotations sorted by (start_ms, end_ms).
inline MarkupDocument parse_eaf(std::string_view bytes) {
  xml::Element root = xml::Parse(bytes);
  if (root.name != "ANNOTATION_DOCUMENT") {
    throw ParseError("root element is <" + root.name + ">, expected <ANNOTATION_DOCUMENT>");
  }

  MarkupDocument doc;
  std::map<std::string, std::optional<int64_t>> slots;

  for (const auto &section : root.children) {
    if (section.name == "HEADER") {
      for (const auto &md : section.children) {
        if (md.name != "MEDIA_DESCRIPTOR") continue;
        if (const std::string *url = md.Attribute("MEDIA_URL")) {
          doc.media_descriptors.push_back(*url);
        }
      }
    } else if (section.name == "TIME_ORDER") {
      for (const auto &slot : section.children) {
        if (slot.name != "TIME_SLOT") continue;
        const std::string *id = slot.Attribute("TIME_SLOT_ID");
        if (!id) throw ParseError("time slot without TIME_SLOT_ID");
        if (slots.count(*id)) throw ParseError("duplicate time slot id \"" + *id + "\"");
        std::optional<int64_t> value;
        if (const std::string *v = slot.Attribute("TIME_VALUE")) {
          int64_t ms;
          if (!detail::ParseMilliseconds(*v, &ms)) {
            throw ParseError("time slot \"" + *id + "\" has non-millisecond value \"" + *v + "\"");
          }
          value = ms;
        }
        slots[*id] = value;
      }
    } else if (section.name == "CONTROLLED_VOCABULARY") {
      throw ParseError("controlled vocabularies are not supported");
    }
    // Everything else (LINGUISTIC_TYPE, LOCALE, CONSTRAINT, ...) is ignored.
  }

  std::set<std::string> tier_names;
  for (const auto &section : root.children) {
    if (section.name != "TIER") continue;
    const std::string *tier_id = section.Attribute("TIER_ID");
    if (!tier_id) throw ParseError("tier without TIER_ID");
    if (!tier_names.insert(*tier_id).second) {
      throw ParseError("duplicate tier name \"" + *tier_id + "\"");
    }
    Tier tier;
    tier.name = *tier_id;
    for (const auto &wrapper : section.children) {
      if (wrapper.name != "ANNOTATION") continue;
      for (const auto &ann : wrapper.children) {
        if (ann.name == "REF_ANNOTATION") {
          throw ParseError("reference annotations are not supported (tier \"" + tier.name + "\")");
        }
        if (ann.name != "ALIGNABLE_ANNOTATION") continue;
        std::string label = "annotation";
        if (const std::string *aid = ann.Attribute("ANNOTATION_ID")) {
          label += " \"" + *aid + "\"";
        }
        label += " in tier \"" + tier.name + "\"";
        const std::string *ref1 = ann.Attribute("TIME_SLOT_REF1");
        const std::string *ref2 = ann.Attribute("TIME_SLOT_REF2");
        if (!ref1 || !ref2) throw ParseError(label + " is missing a time slot reference");
        auto resolve = [&](const std::string &ref) -> int64_t {
          auto it = slots.find(ref);
          if (it == slots.end()) {
            throw ParseError(label + " references missing time slot \"" + ref + "\"");
          }
          if (!it->second.has_value()) {
            throw ParseError(label + " references unvalued time slot \"" + ref + "\"");
          }
          return *it->second;
        };
        Annotation a;
        a.start_ms = resolve(*ref1);
        a.end_ms = resolve(*ref2);
        if (a.start_ms >= a.end_ms) {
          throw ParseError(label + " has start " + std::to_string(a.start_ms) +
                           " ms not before end " + std::to_string(a.end_ms) + " ms");
        }
        const xml::Element *value_el = ann.Child("ANNOTATION_VALUE");
        a.value = value_el ? std::string(detail::TrimView(value_el->text)) : std::string();
        if (a.value.empty()) throw ParseError(label + " has an empty value");
        tier.annotations.push_back(std::move(a));
      }
    }
    detail::SortAnnotations(&tier.annotations);
    doc.tiers.push_back(std::move(tier));
  }
  return doc;
}

// Serializes to canonical annotation-document XML: fixed header, time slots
// re-numbered in emission order, two per annotation. The output re-parses to
// a document equal to the input.
inline std::string serialize_eaf(const MarkupDocument &doc) {
  std::set<std::string> tier_names;
  for (const auto &tier : doc.tiers) {
    if (!tier_names.insert(tier.name).second) {
      throw SerializeError("duplicate tier name \"" + tier.name + "\"");
    }
    const Annotation *prev = nullptr;
    for (const auto &a : tier.annotations) {
      if (a.start_ms < 0 || a.start_ms >= a.end_ms) {
        throw SerializeError("annotation \"" + a.value + "\" in tier \"" + tier.name +
                             "\" has an invalid time span");
      }
      if (a.value.empty() || detail::TrimView(a.value) != a.value) {
        throw SerializeError("tier \"" + tier.name +
                             "\" has an annotation value that is empty or has surrounding whitespace");
      }
      if (prev && (prev->start_ms > a.start_ms ||
                   (prev->start_ms == a.start_ms && prev->end_ms > a.end_ms))) {
        throw SerializeError("tier \"" + tier.name + "\" annotations are not sorted");
      }
      prev = &a;
    }
  }

  std::string out;
  out +=
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<ANNOTATION_DOCUMENT AUTHOR=\"\" DATE=\"2001-01-01T00:00:00+00:00\" FORMAT=\"3.0\" "
      "VERSION=\"3.0\" xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
      "xsi:noNamespaceSchemaLocation=\"http://www.mpi.nl/tools/elan/EAFv3.0.xsd\">\n";
  out += "    <HEADER MEDIA_FILE=\"\" TIME_UNITS=\"milliseconds\">\n";
  for (const auto &media : doc.media_descriptors) {
    out += "        <MEDIA_DESCRIPTOR MEDIA_URL=\"" + xml::EscapeAttribute(media) +
           "\" MIME_TYPE=\"audio/x-wav\"/>\n";
  }
  out += "    </HEADER>\n";

  out += "    <TIME_ORDER>\n";
  int slot = 0;
  for (const auto &tier : doc.tiers) {
    for (const auto &a : tier.annotations) {
      out += "        <TIME_SLOT TIME_SLOT_ID=\"ts" + std::to_string(++slot) +
             "\" TIME_VALUE=\"" + std::to_string(a.start_ms) + "\"/>\n";
      out += "        <TIME_SLOT TIME_SLOT_ID=\"ts" + std::to_string(++slot) +
             "\" TIME_VALUE=\"" + std::to_string(a.end_ms) + "\"/>\n";
    }
  }
  out += "    </TIME_ORDER>\n";

  slot = 0;
  int annotation_id = 0;
  for (const auto &tier : doc.tiers) {
    out += "    <TIER LINGUISTIC_TYPE_REF=\"default-lt\" TIER_ID=\"" +
           xml::EscapeAttribute(tier.name) + "\">\n";
    for (const auto &a : tier.annotations) {
      const int ref1 = ++slot;
      const int ref2 = ++slot;
      out += "        <ANNOTATION>\n";
      out += "            <ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a" +
             std::to_string(++annotation_id) + "\" TIME_SLOT_REF1=\"ts" +
             std::to_string(ref1) + "\" TIME_SLOT_REF2=\"ts" + std::to_string(ref2) + "\">\n";
      out += "                <ANNOTATION_VALUE>" + xml::Escape(a.value) +
             "</ANNOTATION_VALUE>\n";
      out += "            </ALIGNABLE_ANNOTATION>\n";
      out += "        </ANNOTATION>\n";
    }
    out += "    </TIER>\n";
  }
  out +=
      "    <LINGUISTIC_TYPE GRAPHIC_REFERENCES=\"false\" LINGUISTIC_TYPE_ID=\"default-lt\" "
      "TIME_ALIGNABLE=\"true\"/>\n"
      "</ANNOTATION_DOCUMENT>\n";
  return out;
}

}  // namespace redial

#endif  // REDIAL_EAF_HPP_
