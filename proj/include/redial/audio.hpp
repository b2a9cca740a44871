// redial/audio.hpp
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
// Sample-exact WAV handling. Only uncompressed 16-bit PCM with one or two
// channels is supported; nothing here ever resamples or dithers. All
// millisecond-to-sample conversion goes through ms_to_sample so that clip
// boundaries agree across cutting, silencing, and statistics.

#ifndef REDIAL_AUDIO_HPP_
#define REDIAL_AUDIO_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redial/errors.hpp"

namespace redial {

struct WavBuffer {
  int sample_rate = 0;  // > 0
  int channels = 0;     // 1 or 2
  std::vector<int16_t> samples;  // interleaved; size divisible by channels

  int64_t frames() const { return static_cast<int64_t>(samples.size()) / channels; }

  friend bool operator==(const WavBuffer &a, const WavBuffer &b) {
    return a.sample_rate == b.sample_rate && a.channels == b.channels && a.samples == b.samples;
  }
};

struct TimeRange {
  int64_t start_ms = 0;
  int64_t end_ms = 0;  // start_ms < end_ms
};

enum class Channel { kLeft, kRight };

// Round-half-up conversion of a millisecond offset to a sample index.
inline int64_t ms_to_sample(int64_t ms, int sample_rate) {
  return (ms * sample_rate + 500) / 1000;
}

// ---------------------------------------------------------------------------
// WAV container.

namespace detail {

inline uint16_t GetU16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}
inline uint32_t GetU32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}
inline void PutU16(std::string *out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}
inline void PutU32(std::string *out, uint32_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

inline void CheckBuffer(const WavBuffer &buf) {
  if (buf.sample_rate <= 0) throw AudioFormatError("sample rate must be positive");
  if (buf.channels != 1 && buf.channels != 2) {
    throw AudioFormatError("channel count must be 1 or 2, got " + std::to_string(buf.channels));
  }
  if (buf.samples.size() % buf.channels != 0) {
    throw AudioFormatError("sample count not divisible by channel count");
  }
}

}  // namespace detail

// Reads a RIFF/WAVE byte stream. Requires PCM format tag 1, 16 bits per
// sample, 1 or 2 channels; other chunks are skipped. Throws AudioFormatError
// naming the offending chunk.
inline WavBuffer read_wav(std::string_view bytes) {
  const auto *p = reinterpret_cast<const unsigned char *>(bytes.data());
  const size_t n = bytes.size();
  if (n < 12 || bytes.substr(0, 4) != "RIFF") {
    throw AudioFormatError("RIFF chunk: missing or truncated header");
  }
  if (bytes.substr(8, 4) != "WAVE") {
    throw AudioFormatError("RIFF chunk: form type is not WAVE");
  }

  WavBuffer buf;
  bool have_fmt = false;
  bool have_data = false;
  std::string_view data_bytes;

  size_t pos = 12;
  while (pos < n) {
    if (pos + 8 > n) throw AudioFormatError("chunk header truncated at byte " + std::to_string(pos));
    std::string id(bytes.substr(pos, 4));
    uint32_t size = detail::GetU32(p + pos + 4);
    pos += 8;
    if (pos + size > n) throw AudioFormatError(id + " chunk: truncated body");
    std::string_view body = bytes.substr(pos, size);
    if (id == "fmt " && !have_fmt) {
      if (size < 16) throw AudioFormatError("fmt chunk: body shorter than 16 bytes");
      const auto *f = reinterpret_cast<const unsigned char *>(body.data());
      uint16_t format_tag = detail::GetU16(f);
      if (format_tag != 1) {
        throw AudioFormatError("fmt chunk: format tag " + std::to_string(format_tag) +
                               " is not uncompressed PCM");
      }
      uint16_t channels = detail::GetU16(f + 2);
      if (channels != 1 && channels != 2) {
        throw AudioFormatError("fmt chunk: " + std::to_string(channels) +
                               " channels, only 1 or 2 supported");
      }
      uint32_t rate = detail::GetU32(f + 4);
      if (rate == 0) throw AudioFormatError("fmt chunk: zero sample rate");
      uint16_t bits = detail::GetU16(f + 14);
      if (bits != 16) {
        throw AudioFormatError("fmt chunk: " + std::to_string(bits) +
                               " bits per sample, only 16 supported");
      }
      buf.sample_rate = static_cast<int>(rate);
      buf.channels = channels;
      have_fmt = true;
    } else if (id == "data" && !have_data) {
      if (size % 2 != 0) throw AudioFormatError("data chunk: odd byte count for 16-bit samples");
      data_bytes = body;
      have_data = true;
    }
    pos += size;
    if (size % 2 == 1) ++pos;  // RIFF chunks are word-aligned
  }

  if (!have_fmt) throw AudioFormatError("fmt chunk: missing");
  if (!have_data) throw AudioFormatError("data chunk: missing");
  if ((data_bytes.size() / 2) % buf.channels != 0) {
    throw AudioFormatError("data chunk: sample count not divisible by channel count");
  }
  buf.samples.resize(data_bytes.size() / 2);
  const auto *d = reinterpret_cast<const unsigned char *>(data_bytes.data());
  for (size_t i = 0; i < buf.samples.size(); ++i) {
    buf.samples[i] = static_cast<int16_t>(detail::GetU16(d + 2 * i));
  }
  return buf;
}

// Canonical writer: RIFF header, then exactly one fmt chunk and one data
// chunk. read_wav(write_wav(b)) == b bit-exactly.
inline std::string write_wav(const WavBuffer &buf) {
  detail::CheckBuffer(buf);
  const uint32_t data_size = static_cast<uint32_t>(buf.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  detail::PutU32(&out, 36 + data_size);
  out += "WAVE";
  out += "fmt ";
  detail::PutU32(&out, 16);
  detail::PutU16(&out, 1);  // PCM
  detail::PutU16(&out, static_cast<uint16_t>(buf.channels));
  detail::PutU32(&out, static_cast<uint32_t>(buf.sample_rate));
  const uint32_t byte_rate = static_cast<uint32_t>(buf.sample_rate) * buf.channels * 2;
  detail::PutU32(&out, byte_rate);
  detail::PutU16(&out, static_cast<uint16_t>(buf.channels * 2));  // block align
  detail::PutU16(&out, 16);                                       // bits per sample
  out += "data";
  detail::PutU32(&out, data_size);
  for (int16_t s : buf.samples) {
    detail::PutU16(&out, static_cast<uint16_t>(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Editing. All operations are pure and preserve rate and channel count.

namespace detail {

// Converts a time range to a sample-frame range validated against `buf`.
inline std::pair<int64_t, int64_t> FrameRange(const WavBuffer &buf, TimeRange range) {
  if (range.start_ms < 0 || range.start_ms >= range.end_ms) {
    throw RangeError("range " + std::to_string(range.start_ms) + ".." +
                     std::to_string(range.end_ms) + " ms is not a forward range");
  }
  int64_t s0 = ms_to_sample(range.start_ms, buf.sample_rate);
  int64_t s1 = ms_to_sample(range.end_ms, buf.sample_rate);
  if (s1 > buf.frames()) {
    throw RangeError("range ends at sample " + std::to_string(s1) + " but buffer has " +
                     std::to_string(buf.frames()) + " frames");
  }
  return {s0, s1};
}

}  // namespace detail

// Extracts the range as a new buffer of exactly
// ms_to_sample(end) - ms_to_sample(start) frames.
inline WavBuffer cut(const WavBuffer &buf, TimeRange range) {
  auto [s0, s1] = detail::FrameRange(buf, range);
  WavBuffer out;
  out.sample_rate = buf.sample_rate;
  out.channels = buf.channels;
  out.samples.assign(buf.samples.begin() + s0 * buf.channels,
                     buf.samples.begin() + s1 * buf.channels);
  return out;
}

// Zeroes every sample of every channel inside the range; all other samples
// are bit-identical to the input.
inline WavBuffer silence(const WavBuffer &buf, TimeRange range) {
  auto [s0, s1] = detail::FrameRange(buf, range);
  WavBuffer out = buf;
  std::fill(out.samples.begin() + s0 * out.channels, out.samples.begin() + s1 * out.channels,
            int16_t{0});
  return out;
}

// Picks one channel of a stereo buffer as a mono buffer of equal frame count.
inline WavBuffer extract_channel(const WavBuffer &buf, Channel channel) {
  if (buf.channels != 2) {
    throw ChannelError("channel extraction requires a stereo buffer, got " +
                       std::to_string(buf.channels) + " channel(s)");
  }
  WavBuffer out;
  out.sample_rate = buf.sample_rate;
  out.channels = 1;
  out.samples.resize(buf.samples.size() / 2);
  const size_t offset = channel == Channel::kLeft ? 0 : 1;
  for (size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] = buf.samples[2 * i + offset];
  }
  return out;
}

// Builds a stereo buffer from two equal-length mono tracks.
inline WavBuffer interleave(const WavBuffer &left, const WavBuffer &right) {
  if (left.channels != 1 || right.channels != 1) {
    throw ChannelError("interleave requires two mono buffers");
  }
  if (left.sample_rate != right.sample_rate) {
    throw ChannelError("interleave requires equal sample rates, got " +
                       std::to_string(left.sample_rate) + " and " +
                       std::to_string(right.sample_rate));
  }
  if (left.samples.size() != right.samples.size()) {
    throw ChannelError("interleave requires equal track lengths, got " +
                       std::to_string(left.samples.size()) + " and " +
                       std::to_string(right.samples.size()) + " frames");
  }
  WavBuffer out;
  out.sample_rate = left.sample_rate;
  out.channels = 2;
  out.samples.resize(left.samples.size() * 2);
  for (size_t i = 0; i < left.samples.size(); ++i) {
    out.samples[2 * i] = left.samples[i];
    out.samples[2 * i + 1] = right.samples[i];
  }
  return out;
}

// Concatenates buffers of identical rate and channel count in order.
inline WavBuffer concat(const std::vector<WavBuffer> &buffers) {
  if (buffers.empty()) throw ConcatError("cannot concatenate an empty list");
  WavBuffer out;
  out.sample_rate = buffers.front().sample_rate;
  out.channels = buffers.front().channels;
  size_t total = 0;
  for (const auto &b : buffers) {
    if (b.sample_rate != out.sample_rate || b.channels != out.channels) {
      throw ConcatError("buffers disagree on sample rate or channel count");
    }
    total += b.samples.size();
  }
  out.samples.reserve(total);
  for (const auto &b : buffers) {
    out.samples.insert(out.samples.end(), b.samples.begin(), b.samples.end());
  }
  return out;
}

// Zero-pads at the end to exactly `frames` frames.
inline WavBuffer pad_to(const WavBuffer &buf, int64_t frames) {
  if (frames < buf.frames()) {
    throw RangeError("cannot pad " + std::to_string(buf.frames()) + " frames down to " +
                     std::to_string(frames));
  }
  WavBuffer out = buf;
  out.samples.resize(static_cast<size_t>(frames) * buf.channels, 0);
  return out;
}

// ---------------------------------------------------------------------------
// The mm:ss.ms duration format: minutes two digits (growing only at 100
// minutes and beyond), seconds two digits, milliseconds exactly three.

inline std::string format_duration(int64_t ms) {
  if (ms < 0) throw FormatError("negative duration " + std::to_string(ms) + " ms");
  int64_t minutes = ms / 60000;
  int64_t seconds = (ms / 1000) % 60;
  int64_t millis = ms % 1000;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02lld:%02lld.%03lld", static_cast<long long>(minutes),
                static_cast<long long>(seconds), static_cast<long long>(millis));
  return buf;
}

inline int64_t parse_duration(std::string_view text) {
  auto fail = [&]() -> int64_t {
    throw FormatError("\"" + std::string(text) + "\" is not an mm:ss.ms duration");
  };
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) return fail();
  std::string_view min_part = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (min_part.size() < 2) return fail();
  if (min_part.size() > 2 && min_part[0] == '0') return fail();
  for (char c : min_part) {
    if (c < '0' || c > '9') return fail();
  }
  if (rest.size() != 6 || rest[2] != '.') return fail();
  for (size_t i : {0u, 1u, 3u, 4u, 5u}) {
    if (rest[i] < '0' || rest[i] > '9') return fail();
  }
  int64_t minutes = 0;
  for (char c : min_part) minutes = minutes * 10 + (c - '0');
  int64_t seconds = (rest[0] - '0') * 10 + (rest[1] - '0');
  if (seconds >= 60) return fail();
  int64_t millis = (rest[3] - '0') * 100 + (rest[4] - '0') * 10 + (rest[5] - '0');
  return (minutes * 60 + seconds) * 1000 + millis;
}

}  // namespace redial

#endif  // REDIAL_AUDIO_HPP_
