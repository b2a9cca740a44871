// redial/lang.hpp
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

#ifndef REDIAL_LANG_HPP_
#define REDIAL_LANG_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

namespace redial {

// The ISO 639-1 two-letter assignment list, sorted. Withdrawn codes
// (in, iw, ji, mo, sh) are not assigned and are not listed.
inline constexpr std::array<std::string_view, 184> kIso639_1 = {
    "aa", "ab", "ae", "af", "ak", "am", "an", "ar", "as", "av", "ay", "az",
    "ba", "be", "bg", "bh", "bi", "bm", "bn", "bo", "br", "bs",
    "ca", "ce", "ch", "co", "cr", "cs", "cu", "cv", "cy",
    "da", "de", "dv", "dz",
    "ee", "el", "en", "eo", "es", "et", "eu",
    "fa", "ff", "fi", "fj", "fo", "fr", "fy",
    "ga", "gd", "gl", "gn", "gu", "gv",
    "ha", "he", "hi", "ho", "hr", "ht", "hu", "hy", "hz",
    "ia", "id", "ie", "ig", "ii", "ik", "io", "is", "it", "iu",
    "ja", "jv",
    "ka", "kg", "ki", "kj", "kk", "kl", "km", "kn", "ko", "kr", "ks", "ku",
    "kv", "kw", "ky",
    "la", "lb", "lg", "li", "ln", "lo", "lt", "lu", "lv",
    "mg", "mh", "mi", "mk", "ml", "mn", "mr", "ms", "mt", "my",
    "na", "nb", "nd", "ne", "ng", "nl", "nn", "no", "nr", "nv", "ny",
    "oc", "oj", "om", "or", "os",
    "pa", "pi", "pl", "ps", "pt",
    "qu",
    "rm", "rn", "ro", "ru", "rw",
    "sa", "sc", "sd", "se", "sg", "si", "sk", "sl", "sm", "sn", "so", "sq",
    "sr", "ss", "st", "su", "sv", "sw",
    "ta", "te", "tg", "th", "ti", "tk", "tl", "tn", "to", "tr", "ts", "tt",
    "tw", "ty",
    "ug", "uk", "ur", "uz",
    "ve", "vi", "vo",
    "wa", "wo",
    "xh",
    "yi", "yo",
    "za", "zh", "zu",
};

inline bool is_assigned_language_code(std::string_view code) {
  return std::binary_search(kIso639_1.begin(), kIso639_1.end(), code);
}

// A two-letter ISO 639-1 code, stored lowercase.
class LanguageCode {
 public:
  LanguageCode() = default;

  // Returns false (leaving out untouched) unless text is a two-letter
  // assigned code; letters are accepted in either case.
  static bool FromText(std::string_view text, LanguageCode *out) {
    if (text.size() != 2) return false;
    char buf[2];
    for (int i = 0; i < 2; ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (!std::isalpha(c)) return false;
      buf[i] = static_cast<char>(std::tolower(c));
    }
    std::string_view lowered(buf, 2);
    if (!is_assigned_language_code(lowered)) return false;
    out->code_[0] = buf[0];
    out->code_[1] = buf[1];
    return true;
  }

  std::string lower() const { return std::string(code_, 2); }

  std::string upper() const {
    std::string s(code_, 2);
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    s[1] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[1])));
    return s;
  }

  friend bool operator==(const LanguageCode &a, const LanguageCode &b) {
    return a.code_[0] == b.code_[0] && a.code_[1] == b.code_[1];
  }
  friend bool operator!=(const LanguageCode &a, const LanguageCode &b) {
    return !(a == b);
  }
  friend bool operator<(const LanguageCode &a, const LanguageCode &b) {
    return a.lower() < b.lower();
  }

 private:
  char code_[2] = {'?', '?'};
};

}  // namespace redial

#endif  // REDIAL_LANG_HPP_
