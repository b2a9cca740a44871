// redial/release.hpp
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
// Release building: validation, pairing, clip cutting, concatenation,
// redaction, CSV emission, and statistics. A release tree looks like
//
//   <out>/recordings/EN_001.wav              redacted full recordings (stereo)
//   <out>/fragments-long/EN_001_7.wav        one stereo clip per pair member
//   <out>/fragments-short/EN_001_3_L.wav     one mono clip per pair member
//   <out>/fragments-short-concat/EN_001_left.wav
//   <out>/participant.csv  producer.csv  conversation.csv
//   <out>/fragments-long.csv  fragments-short.csv
//   <out>/manifest.txt
//
// Builds are deterministic: identical inputs give byte-identical trees,
// whatever the job count. A conversation pair that yields no fragment pairs
// at all is omitted from every output.

#ifndef REDIAL_RELEASE_HPP_
#define REDIAL_RELEASE_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "redial/audio.hpp"
#include "redial/csv.hpp"
#include "redial/eaf.hpp"
#include "redial/errors.hpp"
#include "redial/io.hpp"
#include "redial/model.hpp"
#include "redial/pairing.hpp"
#include "redial/validate.hpp"

namespace redial {

struct ReleaseConfig {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  bool strict = false;
  std::optional<std::filesystem::path> report_path;
  int jobs = 1;
};

struct ReleaseManifest {
  std::vector<std::string> included_conversations;  // stems, sorted
  int64_t recordings = 0;
  int64_t long_clips = 0;
  int64_t short_clips = 0;
  int64_t concatenations = 0;
  std::vector<Diagnostic> diagnostics;  // everything validation reported
  std::vector<std::string> warnings;    // e.g. dual-mono length padding
  std::string redaction_mode = "silence";

  // manifest.txt body; deterministic.
  std::string Text() const {
    std::string out;
    out += "format: 1\n";
    out += "redaction_mode: " + redaction_mode + "\n";
    out += "included_conversations: " + std::to_string(included_conversations.size()) + "\n";
    out += "recordings: " + std::to_string(recordings) + "\n";
    out += "long_clips: " + std::to_string(long_clips) + "\n";
    out += "short_clips: " + std::to_string(short_clips) + "\n";
    out += "concatenations: " + std::to_string(concatenations) + "\n";
    out += "diagnostics_total: " + std::to_string(diagnostics.size()) + "\n";
    for (int c = 0; c < kDiagnosticCodeCount; ++c) {
      auto code = static_cast<DiagnosticCode>(c);
      int64_t n = 0;
      for (const auto &d : diagnostics) n += d.code == code ? 1 : 0;
      out += "diagnostics " + std::string(ToText(code)) + ": " + std::to_string(n) + "\n";
    }
    out += "included:\n";
    for (const auto &stem : included_conversations) out += stem + "\n";
    return out;
  }
};

struct CorpusStats {
  int64_t conversations = 0;
  int64_t participants = 0;
  int64_t long_pairs = 0;
  double mean_long_duration_s = 0.0;  // rounded to one decimal
  int64_t short_pairs = 0;
  double mean_short_duration_s = 0.0;  // rounded to one decimal
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Input loading shared by `validate` and `build`.

struct LoadedCorpus {
  Corpus corpus;
  std::map<std::string, MarkupDocument> markups;  // keyed by conversation stem
};

// Discovers the corpus under `input_dir` (metadata CSVs at the root,
// audio/markup under recordings/) and parses every markup file found.
// An unparsable markup file aborts: no diagnostic code covers it.
inline LoadedCorpus load_corpus(const std::filesystem::path &input_dir) {
  LoadedCorpus loaded;
  loaded.corpus = discover_corpus(input_dir / "recordings", input_dir);
  for (const auto &conv : loaded.corpus.conversations) {
    if (!conv.files.has_markup) continue;
    const std::filesystem::path &path = conv.files.markup_path;
    try {
      loaded.markups[conv.Stem()] = parse_eaf(ReadFile(path));
    } catch (const ParseError &e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return loaded;
}

// ---------------------------------------------------------------------------
// Build internals.

namespace detail {

// Removes every annotation condemned by validation, keeping DELETE
// directives so redaction still applies.
inline MarkupDocument FilterDocument(const MarkupDocument &doc, const std::string &stem,
                                     const std::set<FragmentKey> &excluded) {
  MarkupDocument out;
  out.media_descriptors = doc.media_descriptors;
  for (const auto &tier : doc.tiers) {
    Tier kept;
    kept.name = tier.name;
    for (const auto &ann : tier.annotations) {
      if (tier.name == kUtteranceTier && ann.value == kDeleteDirective) {
        kept.annotations.push_back(ann);
        continue;
      }
      if (excluded.count(MakeFragmentKey(stem, tier.name, ann.value))) continue;
      kept.annotations.push_back(ann);
    }
    out.tiers.push_back(std::move(kept));
  }
  return out;
}

// Reads a conversation's recording as one stereo buffer. Dual-mono tracks
// are zero-padded to the longer track before interleaving; the padding is
// reported as a warning.
inline WavBuffer LoadRecording(const ConversationRecord &conv,
                               std::vector<std::string> *warnings) {
  if (conv.files.layout == AudioLayout::kStereoSingle) {
    WavBuffer buf = read_wav(ReadFile(conv.files.audio_path));
    if (buf.channels != 2) {
      throw ChannelError(conv.files.audio_path.string() +
                         ": single-file recordings must be stereo");
    }
    return buf;
  }
  if (conv.files.layout != AudioLayout::kDualMono) {
    throw IoError("conversation " + conv.Stem() + " has no audio on disk");
  }
  WavBuffer left = read_wav(ReadFile(conv.files.left_path));
  WavBuffer right = read_wav(ReadFile(conv.files.right_path));
  if (left.channels != 1 || right.channels != 1) {
    throw ChannelError(conv.files.audio_path.string() + ": dual-mono tracks must be mono");
  }
  if (left.frames() != right.frames()) {
    int64_t frames = std::max(left.frames(), right.frames());
    warnings->push_back("conversation " + conv.Stem() + ": dual-mono tracks differ (" +
                        std::to_string(left.frames()) + " vs " + std::to_string(right.frames()) +
                        " frames); zero-padding the shorter to " + std::to_string(frames));
    left = pad_to(left, frames);
    right = pad_to(right, frames);
  }
  return interleave(left, right);
}

// Zeroes a redaction span, clamped to the buffer (a span may outrun the
// audio; the part past the end is vacuously redacted).
inline void SilenceClamped(WavBuffer *buf, int64_t start_ms, int64_t end_ms) {
  int64_t s0 = std::min(ms_to_sample(start_ms, buf->sample_rate), buf->frames());
  int64_t s1 = std::min(ms_to_sample(end_ms, buf->sample_rate), buf->frames());
  if (s0 >= s1) return;
  std::fill(buf->samples.begin() + s0 * buf->channels, buf->samples.begin() + s1 * buf->channels,
            int16_t{0});
}

// Fragment-table row: id,time_start,time_end,duration,conv_id,trans_id.
inline std::vector<std::string> FragmentRow(const std::string &id, const Fragment &frag,
                                            const std::string &trans_clip_id) {
  return {id,
          format_duration(frag.start_ms),
          format_duration(frag.end_ms),
          format_duration(frag.end_ms - frag.start_ms),
          frag.conv_id.Canonical(),
          trans_clip_id};
}

inline std::string SideSuffix(FragmentSide side) {
  return side == FragmentSide::kLeft ? "L" : "R";
}

// Clip ids name files 1:1: LONG clips are `<FragmentId>`, SHORT clips carry
// an `_L`/`_R` suffix so a LittleLeft and LittleRight fragment with the same
// value cannot collide.
inline std::string ClipId(const Fragment &frag) {
  std::string id = fragment_id(frag).Text();
  if (frag.kind == FragmentKind::kShort) id += "_" + SideSuffix(frag.side);
  return id;
}

// Everything one conversation-pair job produces.
struct PairOutput {
  bool included = false;
  std::string og_stem;
  std::string re_stem;
  int64_t recordings = 0;
  int64_t long_clips = 0;
  int64_t short_clips = 0;
  int64_t concatenations = 0;
  std::vector<std::vector<std::string>> long_rows;
  std::vector<std::vector<std::string>> short_rows;
  std::vector<std::string> warnings;
};

struct PairInput {
  const ConversationRecord *og;
  const ConversationRecord *re;
  MarkupDocument og_doc;  // already filtered
  MarkupDocument re_doc;
};

// Cuts, redacts, and writes every file for one conversation pair.
inline PairOutput BuildPair(const PairInput &in, const std::filesystem::path &out_dir) {
  PairOutput out;
  out.og_stem = in.og->Stem();
  out.re_stem = in.re->Stem();

  ExtractResult og_extract = extract_fragments(*in.og, in.og_doc);
  ExtractResult re_extract = extract_fragments(*in.re, in.re_doc);
  RedactionResult og_kept = apply_redactions(og_extract.fragments, og_extract.redactions);
  RedactionResult re_kept = apply_redactions(re_extract.fragments, re_extract.redactions);
  PairResult pairs = pair_fragments(og_kept.kept, re_kept.kept);
  if (pairs.pairs.empty()) return out;  // nothing pairable: omit entirely
  out.included = true;

  WavBuffer og_audio = LoadRecording(*in.og, &out.warnings);
  WavBuffer re_audio = LoadRecording(*in.re, &out.warnings);

  // Redacted full recordings.
  struct MemberRef {
    const ConversationRecord *conv;
    WavBuffer *audio;
    const ExtractResult *extract;
  };
  const MemberRef members[] = {{in.og, &og_audio, &og_extract},
                               {in.re, &re_audio, &re_extract}};
  for (const MemberRef &m : members) {
    for (const auto &span : m.extract->redactions) {
      SilenceClamped(m.audio, span.start_ms, span.end_ms);
    }
    WriteFile(out_dir / "recordings" / (m.conv->Stem() + ".wav"), write_wav(*m.audio));
    ++out.recordings;
  }

  // Clips. Short clips per conversation and side are remembered in start
  // order for the concatenation files.
  std::map<std::pair<std::string, FragmentSide>, std::vector<WavBuffer>> concat_parts;
  auto emit_member = [&](const Fragment &frag, const Fragment &partner, const WavBuffer &audio) {
    WavBuffer clip = cut(audio, TimeRange{frag.start_ms, frag.end_ms});
    if (frag.kind == FragmentKind::kLong) {
      WriteFile(out_dir / "fragments-long" / (ClipId(frag) + ".wav"), write_wav(clip));
      out.long_rows.push_back(FragmentRow(ClipId(frag), frag, ClipId(partner)));
      ++out.long_clips;
      return;
    }
    WavBuffer mono = extract_channel(
        clip, frag.side == FragmentSide::kLeft ? Channel::kLeft : Channel::kRight);
    WriteFile(out_dir / "fragments-short" / (ClipId(frag) + ".wav"), write_wav(mono));
    out.short_rows.push_back(FragmentRow(ClipId(frag), frag, ClipId(partner)));
    ++out.short_clips;
    concat_parts[{frag.conv_id.Canonical(), frag.side}].push_back(std::move(mono));
  };
  // pairs.pairs is sorted by og.start_ms; the re side is re-sorted per
  // conversation below by collecting in fragment start order.
  for (const auto &pair : pairs.pairs) {
    emit_member(pair.og, pair.re, og_audio);
  }
  std::vector<const FragmentPair *> by_re_start;
  for (const auto &pair : pairs.pairs) by_re_start.push_back(&pair);
  std::stable_sort(by_re_start.begin(), by_re_start.end(),
                   [](const FragmentPair *a, const FragmentPair *b) {
                     if (a->re.start_ms != b->re.start_ms) return a->re.start_ms < b->re.start_ms;
                     if (a->re.end_ms != b->re.end_ms) return a->re.end_ms < b->re.end_ms;
                     return a->re.canonical_value < b->re.canonical_value;
                   });
  for (const FragmentPair *pair : by_re_start) {
    emit_member(pair->re, pair->og, re_audio);
  }

  // Concatenations, per conversation and track, parts already in start order.
  for (const auto &[key, parts] : concat_parts) {
    const auto &[conv_id, side] = key;
    std::string name =
        conv_id + (side == FragmentSide::kLeft ? "_left" : "_right") + ".wav";
    WriteFile(out_dir / "fragments-short-concat" / name, write_wav(concat(parts)));
    ++out.concatenations;
  }
  return out;
}

inline void SortRowsById(std::vector<std::vector<std::string>> *rows) {
  std::sort(rows->begin(), rows->end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// build_release.

inline void check_release_config(const ReleaseConfig &cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::weakly_canonical(cfg.input_dir, ec) == fs::weakly_canonical(cfg.output_dir, ec)) {
    throw ConfigError("input and output directories must differ");
  }
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
}

// Writes a release from an already-loaded and already-validated corpus.
// Callers that print diagnostics themselves (the command-line tool) use this
// to avoid loading twice; everyone else wants the one-argument overload.
inline ReleaseManifest build_release(const ReleaseConfig &cfg, const LoadedCorpus &loaded,
                                     const ValidationResult &validation) {
  namespace fs = std::filesystem;
  check_release_config(cfg);

  if (fs::exists(cfg.output_dir)) {
    if (!fs::is_directory(cfg.output_dir)) {
      throw IoError(cfg.output_dir.string() + " exists and is not a directory");
    }
    if (!fs::is_empty(cfg.output_dir)) {
      throw IoError("refusing to write into non-empty directory " + cfg.output_dir.string());
    }
  }
  fs::create_directories(cfg.output_dir);
  for (const char *sub : {"recordings", "fragments-long", "fragments-short",
                          "fragments-short-concat"}) {
    fs::create_directories(cfg.output_dir / sub);
  }

  // One job per surviving pair, with filtered markup prepared up front.
  std::vector<detail::PairInput> inputs;
  for (const auto &[og_index, re_index] : validation.surviving_pairs) {
    const auto &og = loaded.corpus.conversations[og_index];
    const auto &re = loaded.corpus.conversations[re_index];
    detail::PairInput in;
    in.og = &og;
    in.re = &re;
    in.og_doc = detail::FilterDocument(loaded.markups.at(og.Stem()), og.Stem(),
                                       validation.excluded_fragments);
    in.re_doc = detail::FilterDocument(loaded.markups.at(re.Stem()), re.Stem(),
                                       validation.excluded_fragments);
    inputs.push_back(std::move(in));
  }

  std::vector<detail::PairOutput> outputs(inputs.size());
  std::vector<std::exception_ptr> failures(inputs.size());
  {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= inputs.size()) return;
        try {
          outputs[i] = detail::BuildPair(inputs[i], cfg.output_dir);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    size_t thread_count =
        std::min(static_cast<size_t>(cfg.jobs), std::max<size_t>(inputs.size(), 1));
    std::vector<std::thread> threads;
    for (size_t t = 1; t < thread_count; ++t) threads.emplace_back(worker);
    worker();
    for (auto &t : threads) t.join();
  }
  for (const auto &failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Deterministic single-threaded assembly.
  ReleaseManifest manifest;
  manifest.diagnostics = validation.diagnostics;
  std::vector<std::vector<std::string>> long_rows;
  std::vector<std::vector<std::string>> short_rows;
  std::set<std::string> included;
  for (const auto &out : outputs) {
    for (const auto &w : out.warnings) manifest.warnings.push_back(w);
    if (!out.included) continue;
    included.insert(out.og_stem);
    included.insert(out.re_stem);
    manifest.recordings += out.recordings;
    manifest.long_clips += out.long_clips;
    manifest.short_clips += out.short_clips;
    manifest.concatenations += out.concatenations;
    long_rows.insert(long_rows.end(), out.long_rows.begin(), out.long_rows.end());
    short_rows.insert(short_rows.end(), out.short_rows.begin(), out.short_rows.end());
  }
  manifest.included_conversations.assign(included.begin(), included.end());
  detail::SortRowsById(&long_rows);
  detail::SortRowsById(&short_rows);

  const std::vector<std::string> fragment_header = {"id",       "time_start", "time_end",
                                                    "duration", "conv_id",    "trans_id"};
  {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(fragment_header);
    rows.insert(rows.end(), long_rows.begin(), long_rows.end());
    WriteFile(cfg.output_dir / "fragments-long.csv", csv::Write(rows));
    rows.assign(1, fragment_header);
    rows.insert(rows.end(), short_rows.begin(), short_rows.end());
    WriteFile(cfg.output_dir / "fragments-short.csv", csv::Write(rows));
  }

  // Metadata: participants and producers in full, conversations filtered to
  // the release with trans_id filled in both directions.
  WriteFile(cfg.output_dir / "participant.csv",
            write_participants_csv(loaded.corpus.participants));
  WriteFile(cfg.output_dir / "producer.csv", write_producers_csv(loaded.corpus.producers));
  {
    std::vector<ConversationRecord> rows;
    auto add_member = [&](const std::string &stem, const std::string &partner) {
      ConversationRecord copy = *loaded.corpus.FindConversation(stem);
      copy.raw_trans_id = partner;
      rows.push_back(std::move(copy));
    };
    for (const auto &out : outputs) {
      if (!out.included) continue;
      add_member(out.og_stem, out.re_stem);
      add_member(out.re_stem, out.og_stem);
    }
    WriteFile(cfg.output_dir / "conversation.csv", write_conversations_csv(std::move(rows)));
  }

  WriteFile(cfg.output_dir / "manifest.txt", manifest.Text());
  return manifest;
}

// Loads, validates, optionally writes the diagnostic report, honors strict
// mode, and then writes the release. Nothing is on disk when StrictModeError
// is thrown (a requested report is the one exception, by design).
inline ReleaseManifest build_release(const ReleaseConfig &cfg) {
  check_release_config(cfg);
  LoadedCorpus loaded = load_corpus(cfg.input_dir);
  ValidationResult validation = validate_corpus(loaded.corpus, loaded.markups);
  if (cfg.report_path) {
    WriteFile(*cfg.report_path, render_report_csv(validation.diagnostics));
  }
  if (cfg.strict && !validation.diagnostics.empty()) {
    throw StrictModeError("strict mode: validation reported " +
                          std::to_string(validation.diagnostics.size()) +
                          " diagnostic(s); nothing written");
  }
  return build_release(cfg, loaded, validation);
}

// ---------------------------------------------------------------------------
// Statistics over a built release.

namespace detail {

struct FragmentTable {
  // Parallel vectors: clip id and duration in milliseconds.
  std::vector<std::string> ids;
  std::vector<int64_t> duration_ms;
};

inline FragmentTable ReadFragmentTable(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path)) {
    throw StatsError(path.string() + ": missing from release");
  }
  std::vector<csv::Record> rows = csv::Parse(ReadFile(path), path.filename().string());
  if (rows.empty() || rows.front().fields !=
                          std::vector<std::string>{"id", "time_start", "time_end", "duration",
                                                   "conv_id", "trans_id"}) {
    throw StatsError(path.string() + ": unexpected header");
  }
  FragmentTable table;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &f = rows[r].fields;
    if (f.size() != 6) throw StatsError(path.string() + ": malformed row");
    int64_t start = parse_duration(f[1]);
    int64_t end = parse_duration(f[2]);
    if (parse_duration(f[3]) != end - start) {
      throw StatsError(path.string() + ": duration column disagrees with time_start/time_end for " +
                       f[0]);
    }
    table.ids.push_back(f[0]);
    table.duration_ms.push_back(end - start);
  }
  return table;
}

inline double RoundTenth(double x) { return std::llround(x * 10.0) / 10.0; }

// Mean clip duration in seconds over every row, rounded to one decimal.
inline double MeanSeconds(const std::vector<int64_t> &duration_ms) {
  if (duration_ms.empty()) return 0.0;
  double total = 0;
  for (int64_t d : duration_ms) total += static_cast<double>(d);
  return RoundTenth(total / static_cast<double>(duration_ms.size()) / 1000.0);
}

// Clip files must exist and agree with their CSV rows to within a
// millisecond; disagreement is reported, not fatal.
inline void CrossCheckClips(const std::filesystem::path &dir, const FragmentTable &table,
                            std::vector<std::string> *warnings) {
  for (size_t i = 0; i < table.ids.size(); ++i) {
    std::filesystem::path clip = dir / (table.ids[i] + ".wav");
    if (!std::filesystem::exists(clip)) {
      throw StatsError(clip.string() + ": clip listed in CSV but missing on disk");
    }
    WavBuffer buf = read_wav(ReadFile(clip));
    double frames_ms = static_cast<double>(buf.frames()) * 1000.0 / buf.sample_rate;
    double row_ms = static_cast<double>(table.duration_ms[i]);
    if (std::abs(frames_ms - row_ms) > 1.0) {
      warnings->push_back(table.ids[i] + ": clip is " + std::to_string(frames_ms) +
                          " ms but the CSV row says " + std::to_string(row_ms) + " ms");
    }
  }
}

}  // namespace detail

inline CorpusStats compute_stats(const std::filesystem::path &release_dir) {
  namespace fs = std::filesystem;
  CorpusStats stats;

  fs::path conv_path = release_dir / "conversation.csv";
  if (!fs::exists(conv_path)) throw StatsError(conv_path.string() + ": missing from release");
  fs::path part_path = release_dir / "participant.csv";
  if (!fs::exists(part_path)) throw StatsError(part_path.string() + ": missing from release");

  std::vector<csv::Record> conv_rows = csv::Parse(ReadFile(conv_path), "conversation.csv");
  if (conv_rows.empty()) throw StatsError("conversation.csv: missing header");
  std::set<std::string> participant_ids;
  std::set<std::string> known_participants;
  std::vector<csv::Record> part_rows = csv::Parse(ReadFile(part_path), "participant.csv");
  for (size_t r = 1; r < part_rows.size(); ++r) {
    if (!part_rows[r].fields.empty()) known_participants.insert(part_rows[r].fields.front());
  }
  for (size_t r = 1; r < conv_rows.size(); ++r) {
    const auto &f = conv_rows[r].fields;
    if (f.size() != 7) throw StatsError("conversation.csv: malformed row");
    ++stats.conversations;
    for (size_t i : {3u, 4u}) {
      if (!known_participants.count(f[i])) {
        throw StatsError("conversation.csv: participant id " + f[i] +
                         " has no participant.csv row");
      }
      participant_ids.insert(f[i]);
    }
  }
  stats.participants = static_cast<int64_t>(participant_ids.size());

  detail::FragmentTable long_table = detail::ReadFragmentTable(release_dir / "fragments-long.csv");
  detail::FragmentTable short_table =
      detail::ReadFragmentTable(release_dir / "fragments-short.csv");
  if (long_table.ids.size() % 2 != 0 || short_table.ids.size() % 2 != 0) {
    throw StatsError("fragment tables must hold both members of every pair");
  }
  stats.long_pairs = static_cast<int64_t>(long_table.ids.size()) / 2;
  stats.short_pairs = static_cast<int64_t>(short_table.ids.size()) / 2;
  stats.mean_long_duration_s = detail::MeanSeconds(long_table.duration_ms);
  stats.mean_short_duration_s = detail::MeanSeconds(short_table.duration_ms);

  detail::CrossCheckClips(release_dir / "fragments-long", long_table, &stats.warnings);
  detail::CrossCheckClips(release_dir / "fragments-short", short_table, &stats.warnings);
  return stats;
}

// Machine-readable stats: a two-column CSV on the metric names used above.
inline std::string render_stats_csv(const CorpusStats &stats) {
  char mean_long[16];
  char mean_short[16];
  std::snprintf(mean_long, sizeof(mean_long), "%.1f", stats.mean_long_duration_s);
  std::snprintf(mean_short, sizeof(mean_short), "%.1f", stats.mean_short_duration_s);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"metric", "value"});
  rows.push_back({"conversations", std::to_string(stats.conversations)});
  rows.push_back({"participants", std::to_string(stats.participants)});
  rows.push_back({"long_pairs", std::to_string(stats.long_pairs)});
  rows.push_back({"mean_long_duration_s", mean_long});
  rows.push_back({"short_pairs", std::to_string(stats.short_pairs)});
  rows.push_back({"mean_short_duration_s", mean_short});
  return csv::Write(rows);
}

}  // namespace redial

#endif  // REDIAL_RELEASE_HPP_
