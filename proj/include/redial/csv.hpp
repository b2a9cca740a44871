// redial/csv.hpp
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

#ifndef REDIAL_CSV_HPP_
#define REDIAL_CSV_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "redial/errors.hpp"

namespace redial {
namespace csv {

struct Record {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line the record starts on
};

// Parses comma-separated records. Fields may be double-quoted; quoted fields
// may contain commas, newlines, and doubled quotes. CRLF is accepted on
// input. `name` is used in error messages only.
inline std::vector<Record> Parse(std::string_view text, const std::string &name) {
  std::vector<Record> records;
  size_t i = 0;
  int line = 1;
  while (i < text.size()) {
    Record rec;
    rec.line = line;
    bool record_done = false;
    while (!record_done) {
      std::string field;
      if (i < text.size() && text[i] == '"') {
        int start_line = line;
        ++i;
        bool closed = false;
        while (i < text.size()) {
          char c = text[i];
          if (c == '"') {
            if (i + 1 < text.size() && text[i + 1] == '"') {
              field.push_back('"');
              i += 2;
            } else {
              ++i;
              closed = true;
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
            ++i;
          }
        }
        if (!closed) {
          throw MetadataError(name + ":" + std::to_string(start_line) +
                              ": unterminated quoted field");
        }
        if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
            text[i] != '\r') {
          throw MetadataError(name + ":" + std::to_string(line) +
                              ": stray text after closing quote");
        }
      } else {
        while (i < text.size() && text[i] != ',' && text[i] != '\n' &&
               text[i] != '\r') {
          if (text[i] == '"') {
            throw MetadataError(name + ":" + std::to_string(line) +
                                ": quote inside unquoted field");
          }
          field.push_back(text[i]);
          ++i;
        }
      }
      rec.fields.push_back(std::move(field));
      if (i >= text.size()) {
        record_done = true;
      } else if (text[i] == ',') {
        ++i;
      } else {
        if (text[i] == '\r') ++i;
        if (i < text.size() && text[i] == '\n') {
          ++i;
          ++line;
        }
        record_done = true;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

inline bool NeedsQuoting(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

inline void AppendField(std::string *out, std::string_view field) {
  if (!NeedsQuoting(field)) {
    out->append(field);
    return;
  }
  out->push_back('"');
  for (char c : field) {
    if (c == '"') out->push_back('"');
    out->push_back(c);
  }
  out->push_back('"');
}

// Canonical form: fields quoted only when needed, '\n' line ends, final
// newline present.
inline std::string Write(const std::vector<std::vector<std::string>> &rows) {
  std::string out;
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      AppendField(&out, row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace csv
}  // namespace redial

#endif  // REDIAL_CSV_HPP_
