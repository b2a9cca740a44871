// redial/errors.hpp
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

#ifndef REDIAL_ERRORS_HPP_
#define REDIAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace redial {

// Malformed markup XML or a markup document outside the supported subset.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document that violates a model invariant cannot be serialized.
class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conversation id text that does not follow <language>_<three digits>.
class IdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Metadata CSV problem; message carries file, line, and column.
class MetadataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// WAV bytes outside the supported RIFF/PCM subset; message names the chunk.
class AudioFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A time range or frame count outside the buffer being operated on.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Channel extraction or interleave applied to a buffer of the wrong shape.
class ChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Concatenation of buffers with mismatched rate or channel count.
class ConcatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed mm:ss.ms duration text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A release directory missing the tables statistics are computed from.
class StatsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure (unreadable directory, failed write).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Release configuration that cannot be acted on (e.g. input == output).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by a strict-mode build when validation reported any diagnostic;
// nothing has been written when this is thrown.
class StrictModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace redial

#endif  // REDIAL_ERRORS_HPP_
