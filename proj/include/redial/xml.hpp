// redial/xml.hpp
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
// Minimal non-validating XML reader: elements, attributes, character data,
// comments, CDATA, processing instructions, and the five named entities plus
// numeric references. Namespaces are not interpreted; DTDs are skipped, not
// processed. Enough for the annotation-document subset this library consumes.

#ifndef REDIAL_XML_HPP_
#define REDIAL_XML_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redial/errors.hpp"

namespace redial {
namespace xml {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;  // concatenated character data directly inside this element
  size_t offset = 0;  // byte offset of the opening '<'

  const std::string *Attribute(std::string_view key) const {
    for (const auto &kv : attributes) {
      if (kv.first == key) return &kv.second;
    }
    return nullptr;
  }

  const Element *Child(std::string_view child_name) const {
    for (const auto &c : children) {
      if (c.name == child_name) return &c;
    }
    return nullptr;
  }
};

namespace detail {

class Reader {
 public:
  explicit Reader(std::string_view input) : in_(input) {}

  Element ParseDocument() {
    SkipProlog();
    if (pos_ >= in_.size() || in_[pos_] != '<') {
      Fail(pos_, "expected root element");
    }
    Element root = ParseElement();
    SkipMisc();
    if (pos_ != in_.size()) Fail(pos_, "trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void Fail(size_t at, const std::string &what) {
    throw ParseError("byte " + std::to_string(at) + ": " + what);
  }

  bool StartsWith(std::string_view prefix) const {
    return in_.compare(pos_, prefix.size(), prefix) == 0;
  }

  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }

  static bool IsNameStart(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == ':' || static_cast<unsigned char>(c) >= 0x80;
  }

  static bool IsNameChar(char c) {
    return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
  }

  void SkipSpace() {
    while (pos_ < in_.size() && IsSpace(in_[pos_])) ++pos_;
  }

  void SkipComment() {
    size_t start = pos_;
    pos_ += 4;  // "<!--"
    size_t end = in_.find("-->", pos_);
    if (end == std::string_view::npos) Fail(start, "unterminated comment");
    pos_ = end + 3;
  }

  void SkipPi() {
    size_t start = pos_;
    size_t end = in_.find("?>", pos_);
    if (end == std::string_view::npos) {
      Fail(start, "unterminated processing instruction");
    }
    pos_ = end + 2;
  }

  void SkipDoctype() {
    size_t start = pos_;
    int depth = 0;
    while (pos_ < in_.size()) {
      char c = in_[pos_++];
      if (c == '<') ++depth;
      if (c == '>') {
        if (depth == 0) return;
        --depth;
      }
    }
    Fail(start, "unterminated doctype");
  }

  void SkipMisc() {
    for (;;) {
      SkipSpace();
      if (StartsWith("<!--")) {
        SkipComment();
      } else if (StartsWith("<?")) {
        SkipPi();
      } else {
        return;
      }
    }
  }

  void SkipProlog() {
    for (;;) {
      SkipSpace();
      if (StartsWith("<?")) {
        SkipPi();
      } else if (StartsWith("<!--")) {
        SkipComment();
      } else if (StartsWith("<!DOCTYPE")) {
        pos_ += 9;
        SkipDoctype();
      } else {
        return;
      }
    }
  }

  std::string ParseName() {
    size_t start = pos_;
    if (pos_ >= in_.size() || !IsNameStart(in_[pos_])) {
      Fail(start, "expected a name");
    }
    while (pos_ < in_.size() && IsNameChar(in_[pos_])) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  void AppendCharRef(size_t at, std::string_view body, std::string *out) {
    uint32_t cp = 0;
    bool any = false;
    if (!body.empty() && (body[0] == 'x' || body[0] == 'X')) {
      for (char c : body.substr(1)) {
        uint32_t d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else Fail(at, "bad hexadecimal character reference");
        cp = cp * 16 + d;
        any = true;
      }
    } else {
      for (char c : body) {
        if (c < '0' || c > '9') Fail(at, "bad character reference");
        cp = cp * 10 + (c - '0');
        any = true;
      }
    }
    if (!any || cp == 0 || cp > 0x10FFFF) Fail(at, "character reference out of range");
    // UTF-8 encode.
    if (cp < 0x80) {
      out->push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  void AppendEntity(std::string *out) {
    size_t at = pos_;
    ++pos_;  // '&'
    size_t semi = in_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 10) {
      Fail(at, "unterminated entity reference");
    }
    std::string_view body = in_.substr(pos_, semi - pos_);
    pos_ = semi + 1;
    if (body == "amp") out->push_back('&');
    else if (body == "lt") out->push_back('<');
    else if (body == "gt") out->push_back('>');
    else if (body == "quot") out->push_back('"');
    else if (body == "apos") out->push_back('\'');
    else if (!body.empty() && body[0] == '#') AppendCharRef(at, body.substr(1), out);
    else Fail(at, "unknown entity &" + std::string(body) + ";");
  }

  std::string ParseAttributeValue() {
    size_t at = pos_;
    if (pos_ >= in_.size() || (in_[pos_] != '"' && in_[pos_] != '\'')) {
      Fail(at, "expected quoted attribute value");
    }
    char quote = in_[pos_++];
    std::string value;
    while (pos_ < in_.size() && in_[pos_] != quote) {
      if (in_[pos_] == '&') {
        AppendEntity(&value);
      } else if (in_[pos_] == '<') {
        Fail(pos_, "'<' in attribute value");
      } else {
        value.push_back(in_[pos_++]);
      }
    }
    if (pos_ >= in_.size()) Fail(at, "unterminated attribute value");
    ++pos_;  // closing quote
    return value;
  }

  Element ParseElement() {
    Element el;
    el.offset = pos_;
    ++pos_;  // '<'
    el.name = ParseName();
    for (;;) {
      SkipSpace();
      if (pos_ >= in_.size()) Fail(el.offset, "unterminated start tag");
      if (in_[pos_] == '/') {
        ++pos_;
        if (pos_ >= in_.size() || in_[pos_] != '>') Fail(pos_, "expected '>'");
        ++pos_;
        return el;  // self-closing
      }
      if (in_[pos_] == '>') {
        ++pos_;
        break;
      }
      std::string key = ParseName();
      SkipSpace();
      if (pos_ >= in_.size() || in_[pos_] != '=') Fail(pos_, "expected '='");
      ++pos_;
      SkipSpace();
      el.attributes.emplace_back(std::move(key), ParseAttributeValue());
    }
    // Content.
    for (;;) {
      if (pos_ >= in_.size()) Fail(el.offset, "unterminated element <" + el.name + ">");
      if (in_[pos_] == '<') {
        if (StartsWith("</")) {
          size_t at = pos_;
          pos_ += 2;
          std::string closing = ParseName();
          if (closing != el.name) {
            Fail(at, "mismatched end tag </" + closing + "> for <" + el.name + ">");
          }
          SkipSpace();
          if (pos_ >= in_.size() || in_[pos_] != '>') Fail(pos_, "expected '>'");
          ++pos_;
          return el;
        }
        if (StartsWith("<!--")) {
          SkipComment();
        } else if (StartsWith("<![CDATA[")) {
          size_t at = pos_;
          pos_ += 9;
          size_t end = in_.find("]]>", pos_);
          if (end == std::string_view::npos) Fail(at, "unterminated CDATA section");
          el.text.append(in_.substr(pos_, end - pos_));
          pos_ = end + 3;
        } else if (StartsWith("<?")) {
          SkipPi();
        } else {
          el.children.push_back(ParseElement());
        }
      } else if (in_[pos_] == '&') {
        AppendEntity(&el.text);
      } else {
        el.text.push_back(in_[pos_++]);
      }
    }
  }

  std::string_view in_;
  size_t pos_ = 0;
};

}  // namespace detail

// Parses one document and returns its root element. Throws ParseError with a
// byte offset on malformed input.
inline Element Parse(std::string_view input) {
  return detail::Reader(input).ParseDocument();
}

inline void EscapeInto(std::string *out, std::string_view text, bool attribute) {
  for (char c : text) {
    switch (c) {
      case '&': out->append("&amp;"); break;
      case '<': out->append("&lt;"); break;
      case '>': out->append("&gt;"); break;
      case '"':
        if (attribute) out->append("&quot;");
        else out->push_back(c);
        break;
      default: out->push_back(c);
    }
  }
}

inline std::string Escape(std::string_view text) {
  std::string out;
  EscapeInto(&out, text, false);
  return out;
}

inline std::string EscapeAttribute(std::string_view text) {
  std::string out;
  EscapeInto(&out, text, true);
  return out;
}

}  // namespace xml
}  // namespace redial

#endif  // REDIAL_XML_HPP_
