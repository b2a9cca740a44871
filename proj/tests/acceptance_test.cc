// tests/acceptance_test.cc
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
// End-to-end acceptance gate. Each test covers one release criterion and
// prints a "[ACCEPTANCE] <criterion>: PASS|FAIL" line; the optional
// published-corpus check prints SKIPPED when REDIAL_PUBLISHED_INPUT is unset.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "redial/audio.hpp"
#include "redial/csv.hpp"
#include "redial/eaf.hpp"
#include "redial/io.hpp"
#include "redial/pairing.hpp"
#include "redial/release.hpp"
#include "redial/testkit.hpp"
#include "redial/validate.hpp"
#include "testutil.hpp"

namespace redial {
namespace {

namespace fs = std::filesystem;
using redial::testing::ReadTree;
using redial::testing::TempDir;

template <typename Body>
void RunCriterion(const char *name, Body &&body) {
  const bool dirty_before = ::testing::Test::HasFailure();
  try {
    body();
  } catch (const std::exception &e) {
    ADD_FAILURE() << "unexpected exception: " << e.what();
  } catch (...) {
    ADD_FAILURE() << "unexpected non-standard exception";
  }
  const bool failed = !dirty_before && ::testing::Test::HasFailure();
  std::printf("[ACCEPTANCE] %s: %s\n", name, failed ? "FAIL" : "PASS");
  std::fflush(stdout);
}

double SecondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ReleaseConfig Cfg(const fs::path &in, const fs::path &out, int jobs = 1) {
  ReleaseConfig cfg;
  cfg.input_dir = in;
  cfg.output_dir = out;
  cfg.jobs = jobs;
  return cfg;
}

// minimal_spec plus a second clean pair, so a fault that evicts the first
// pair still leaves something releasable.
FixtureSpec TwoPairSpec() {
  FixtureSpec spec = minimal_spec();
  spec.participants.push_back(testdetail::MakeParticipant(3, "de", "fr"));
  spec.participants.push_back(testdetail::MakeParticipant(4, "fr", "de"));
  ConversationPlan og;
  og.id_text = "DE_002";
  og.og_re_text = "OG";
  og.participant_left = 3;
  og.participant_right = 4;
  og.producer = 1;
  og.annotations = {{"Utterance", "2", 300, 900}};
  ConversationPlan re = og;
  re.id_text = "FR_002";
  re.og_re_text = "RE";
  re.annotations = {{"Utterance", "2", 400, 1000}};
  spec.conversations.push_back(og);
  spec.conversations.push_back(re);
  return spec;
}

struct CsvFragmentRow {
  std::string id;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
};

std::vector<CsvFragmentRow> ReadFragmentRows(const fs::path &path) {
  std::vector<csv::Record> rows = csv::Parse(ReadFile(path), path.filename().string());
  std::vector<CsvFragmentRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    out.push_back(CsvFragmentRow{rows[r].fields.at(0), parse_duration(rows[r].fields.at(1)),
                                 parse_duration(rows[r].fields.at(2))});
  }
  return out;
}

bool DocsEqual(const MarkupDocument &a, const MarkupDocument &b) {
  if (a.media_descriptors != b.media_descriptors) return false;
  if (a.tiers.size() != b.tiers.size()) return false;
  for (size_t t = 0; t < a.tiers.size(); ++t) {
    if (a.tiers[t].name != b.tiers[t].name) return false;
    if (a.tiers[t].annotations.size() != b.tiers[t].annotations.size()) return false;
    for (size_t i = 0; i < a.tiers[t].annotations.size(); ++i) {
      const Annotation &x = a.tiers[t].annotations[i];
      const Annotation &y = b.tiers[t].annotations[i];
      if (x.value != y.value || x.start_ms != y.start_ms || x.end_ms != y.end_ms) return false;
    }
  }
  return true;
}

// Criterion: every diagnostic code can be provoked in isolation; the faulty
// conversations never reach the release while clean pairs always do; the
// whole sweep finishes within ten seconds.
TEST(AcceptanceTest, DiagnosticInjection) {
  RunCriterion("every diagnostic code fires exactly once and evicts only its pair", [] {
    const auto t0 = std::chrono::steady_clock::now();
    for (int c = 0; c < kDiagnosticCodeCount; ++c) {
      const auto code = static_cast<DiagnosticCode>(c);
      const FixtureSpec spec = inject_fault(TwoPairSpec(), code);
      TempDir tmp;
      make_fixture(spec, tmp / "in");

      LoadedCorpus loaded = load_corpus(tmp / "in");
      ValidationResult validation = validate_corpus(loaded.corpus, loaded.markups);
      EXPECT_EQ(validation.diagnostics.size(), 1u) << ToText(code);
      EXPECT_EQ(validation.CountCode(code), 1) << ToText(code);

      ReleaseManifest manifest = build_release(Cfg(tmp / "in", tmp / "out"));
      const auto &included = manifest.included_conversations;
      auto has = [&](const std::string &stem) {
        return std::find(included.begin(), included.end(), stem) != included.end();
      };
      EXPECT_TRUE(has("DE_002")) << ToText(code);
      EXPECT_TRUE(has("FR_002")) << ToText(code);
      const bool first_pair_is_victim = code == DiagnosticCode::kMissingMarkup ||
                                        code == DiagnosticCode::kMissingAudio;
      EXPECT_EQ(has("EN_001"), !first_pair_is_victim) << ToText(code);
      EXPECT_EQ(has("ES_001"), !first_pair_is_victim) << ToText(code);

      const std::vector<std::string> tree = redial::testing::ListTree(tmp / "out");
      for (const std::string &stem : fault_target_stems(TwoPairSpec(), code)) {
        EXPECT_FALSE(has(stem)) << ToText(code);
        for (const std::string &rel : tree) {
          EXPECT_EQ(rel.find(stem), std::string::npos) << ToText(code) << ": " << rel;
        }
      }
    }
    EXPECT_LT(SecondsSince(t0), 10.0);
  });
}

// Criterion: across 500 seeded corpora, validation exclusions, released
// pairs, pair counts, and duration means all equal an independent
// brute-force recomputation, and a sample of those corpora built on disk
// matches it too; the sweep finishes within sixty seconds.
TEST(AcceptanceTest, OracleAgreement) {
  RunCriterion("500 seeded corpora match the brute-force oracle", [] {
    const auto t0 = std::chrono::steady_clock::now();
    for (uint64_t seed = 1; seed <= 500; ++seed) {
      const FixtureSpec spec = random_spec(seed, 20, true);
      const OracleExpectation ex = oracle_expectation(spec);
      LoadedCorpus loaded = materialize(spec);
      ValidationResult validation = validate_corpus(loaded.corpus, loaded.markups);

      ASSERT_EQ(validation.excluded_conversations, ex.excluded_conversations) << "seed " << seed;
      std::set<std::string> got_excluded;
      for (const FragmentKey &key : validation.excluded_fragments) {
        got_excluded.insert(key.conversation + "|" + key.tier + "|" + key.value);
      }
      ASSERT_EQ(got_excluded, ex.excluded_fragment_keys) << "seed " << seed;

      std::set<std::string> got_keys;
      std::vector<int64_t> long_ms;
      std::vector<int64_t> short_ms;
      std::set<std::string> included_convs;
      std::set<int64_t> included_parts;
      for (const auto &[i, j] : validation.surviving_pairs) {
        const ConversationRecord &og = loaded.corpus.conversations[i];
        const ConversationRecord &re = loaded.corpus.conversations[j];
        MarkupDocument og_doc = detail::FilterDocument(loaded.markups.at(og.Stem()), og.Stem(),
                                                       validation.excluded_fragments);
        MarkupDocument re_doc = detail::FilterDocument(loaded.markups.at(re.Stem()), re.Stem(),
                                                       validation.excluded_fragments);
        ExtractResult og_extract = extract_fragments(og, og_doc);
        ExtractResult re_extract = extract_fragments(re, re_doc);
        std::vector<Fragment> og_kept =
            apply_redactions(og_extract.fragments, og_extract.redactions).kept;
        std::vector<Fragment> re_kept =
            apply_redactions(re_extract.fragments, re_extract.redactions).kept;
        PairResult pairs = pair_fragments(og_kept, re_kept);
        if (!pairs.pairs.empty()) {
          included_convs.insert(og.Stem());
          included_convs.insert(re.Stem());
          included_parts.insert(og.participant_id_left);
          included_parts.insert(og.participant_id_right);
          included_parts.insert(re.participant_id_left);
          included_parts.insert(re.participant_id_right);
        }
        for (const FragmentPair &pair : pairs.pairs) {
          got_keys.insert(pair_key_of(pair));
          auto &bucket = pair.og.kind == FragmentKind::kLong ? long_ms : short_ms;
          bucket.push_back(pair.og.end_ms - pair.og.start_ms);
          bucket.push_back(pair.re.end_ms - pair.re.start_ms);
        }
      }
      ASSERT_EQ(got_keys, ex.pair_keys) << "seed " << seed;
      ASSERT_EQ(static_cast<int64_t>(long_ms.size()) / 2, ex.long_pairs) << "seed " << seed;
      ASSERT_EQ(static_cast<int64_t>(short_ms.size()) / 2, ex.short_pairs) << "seed " << seed;
      ASSERT_DOUBLE_EQ(detail::MeanSeconds(long_ms), ex.mean_long_s) << "seed " << seed;
      ASSERT_DOUBLE_EQ(detail::MeanSeconds(short_ms), ex.mean_short_s) << "seed " << seed;
      ASSERT_EQ(static_cast<int64_t>(included_convs.size()), ex.conversations) << "seed " << seed;
      ASSERT_EQ(static_cast<int64_t>(included_parts.size()), ex.participants) << "seed " << seed;
    }

    // Anchor a sample of seeds to actual on-disk builds and their stats.
    for (uint64_t seed : {1u, 7u, 13u, 21u, 34u, 55u, 89u, 144u}) {
      const FixtureSpec spec = random_spec(seed, 20, true);
      const OracleExpectation ex = oracle_expectation(spec);
      TempDir tmp;
      make_fixture(spec, tmp / "in");
      ReleaseManifest manifest = build_release(Cfg(tmp / "in", tmp / "out", 2));
      EXPECT_EQ(manifest.long_clips, 2 * ex.long_pairs) << "seed " << seed;
      EXPECT_EQ(manifest.short_clips, 2 * ex.short_pairs) << "seed " << seed;
      EXPECT_EQ(static_cast<int64_t>(manifest.included_conversations.size()), ex.conversations)
          << "seed " << seed;
      CorpusStats stats = compute_stats(tmp / "out");
      EXPECT_EQ(stats.conversations, ex.conversations) << "seed " << seed;
      EXPECT_EQ(stats.participants, ex.participants) << "seed " << seed;
      EXPECT_EQ(stats.long_pairs, ex.long_pairs) << "seed " << seed;
      EXPECT_EQ(stats.short_pairs, ex.short_pairs) << "seed " << seed;
      EXPECT_DOUBLE_EQ(stats.mean_long_duration_s, ex.mean_long_s) << "seed " << seed;
      EXPECT_DOUBLE_EQ(stats.mean_short_duration_s, ex.mean_short_s) << "seed " << seed;
      EXPECT_TRUE(stats.warnings.empty()) << "seed " << seed;
    }
    EXPECT_LT(SecondsSince(t0), 60.0);
  });
}

// Criterion: released clips hold exactly ms_to_sample(end) -
// ms_to_sample(start) frames, a recording split at arbitrary points and
// rejoined is bit-identical, and concatenations hold the sum of their parts.
TEST(AcceptanceTest, SampleExactness) {
  RunCriterion("released clips are sample-exact", [] {
    {
      FixtureSpec spec = minimal_spec();
      spec.conversations[0].annotations = {{"Utterance", "#1", 1000, 3300}};
      spec.conversations[1].annotations = {{"Utterance", "1", 500, 2000}};
      TempDir tmp;
      make_fixture(spec, tmp / "in");
      build_release(Cfg(tmp / "in", tmp / "out"));
      WavBuffer en = read_wav(ReadFile(tmp / "out/fragments-long/EN_001_1.wav"));
      EXPECT_EQ(en.frames(), ms_to_sample(3300, 44100) - ms_to_sample(1000, 44100));
      EXPECT_EQ(en.frames(), 101430);
      WavBuffer es = read_wav(ReadFile(tmp / "out/fragments-long/ES_001_1.wav"));
      EXPECT_EQ(es.frames(), ms_to_sample(2000, 44100) - ms_to_sample(500, 44100));
      EXPECT_EQ(es.frames(), 66150);
    }
    {
      // Split at arbitrary millisecond boundaries and rejoin: bit-identical.
      WavBuffer tone = testdetail::SynthTone(4000, 440.0, 660.0);
      const int64_t cuts_ms[] = {0, 777, 1234, 2048, 3999, 4000};
      std::vector<WavBuffer> parts;
      int64_t frame_sum = 0;
      for (size_t i = 0; i + 1 < std::size(cuts_ms); ++i) {
        parts.push_back(cut(tone, TimeRange{cuts_ms[i], cuts_ms[i + 1]}));
        frame_sum += parts.back().frames();
      }
      WavBuffer rejoined = concat(parts);
      EXPECT_EQ(rejoined.frames(), frame_sum);
      EXPECT_EQ(rejoined.frames(), tone.frames());
      EXPECT_TRUE(rejoined.samples == tone.samples);
      EXPECT_TRUE(write_wav(rejoined) == write_wav(tone));
    }
    {
      // A released concatenation is the byte-exact concat of its member
      // clips and holds the sum of their frames.
      FixtureSpec spec = minimal_spec();
      spec.conversations[0].annotations = {{"Utterance", "1", 100, 3900},
                                           {"LittleLeft", "1.1", 200, 650},
                                           {"LittleLeft", "1.2", 700, 1433}};
      spec.conversations[1].annotations = {{"Utterance", "1", 150, 3800},
                                           {"LittleLeft", "1.1", 300, 750},
                                           {"LittleLeft", "1.2", 800, 1533}};
      TempDir tmp;
      make_fixture(spec, tmp / "in");
      build_release(Cfg(tmp / "in", tmp / "out"));
      WavBuffer part1 = read_wav(ReadFile(tmp / "out/fragments-short/EN_001_1.1_L.wav"));
      WavBuffer part2 = read_wav(ReadFile(tmp / "out/fragments-short/EN_001_1.2_L.wav"));
      std::string joined = ReadFile(tmp / "out/fragments-short-concat/EN_001_left.wav");
      EXPECT_TRUE(joined == write_wav(concat({part1, part2})));
      EXPECT_EQ(read_wav(joined).frames(), part1.frames() + part2.frames());
    }
  });
}

// Criterion: markup parse/serialize is a semantic identity on 100 documents,
// audio read/write is a bit identity, and duration format/parse is an
// identity over 10,000 random values.
TEST(AcceptanceTest, CodecRoundTrips) {
  RunCriterion("markup, audio, and duration codecs round-trip", [] {
    int docs_checked = 0;
    for (uint64_t seed = 1; docs_checked < 100; ++seed) {
      LoadedCorpus loaded = materialize(random_spec(seed, 20, true));
      for (const auto &[stem, doc] : loaded.markups) {
        MarkupDocument again = parse_eaf(serialize_eaf(doc));
        EXPECT_TRUE(DocsEqual(doc, again)) << "seed " << seed << " " << stem;
        ++docs_checked;
      }
    }
    {
      // Markup with every XML special in names, values, and media paths.
      MarkupDocument doc;
      doc.media_descriptors = {"weird &<>\"'.wav"};
      Tier tier;
      tier.name = "Tier & <with> \"specials\" '";
      tier.annotations = {Annotation{"a & b < c > d \" e ' f", 10, 20},
                          Annotation{"plain", 30, 40}};
      doc.tiers = {tier};
      MarkupDocument again = parse_eaf(serialize_eaf(doc));
      EXPECT_TRUE(DocsEqual(doc, again));
    }
    {
      std::mt19937_64 rng(0xA4D10);
      for (int round = 0; round < 24; ++round) {
        WavBuffer buf;
        buf.sample_rate = round % 2 == 0 ? 44100 : 16000;
        buf.channels = round % 3 == 0 ? 1 : 2;
        const int64_t frames = 1 + static_cast<int64_t>(rng() % 5000);
        buf.samples.resize(static_cast<size_t>(frames * buf.channels));
        for (auto &s : buf.samples) s = static_cast<int16_t>(rng());
        const std::string bytes = write_wav(buf);
        WavBuffer back = read_wav(bytes);
        EXPECT_EQ(back.sample_rate, buf.sample_rate);
        EXPECT_EQ(back.channels, buf.channels);
        EXPECT_TRUE(back.samples == buf.samples) << "round " << round;
        EXPECT_TRUE(write_wav(back) == bytes) << "round " << round;
      }
    }
    {
      std::mt19937_64 rng(0xD00D);
      std::uniform_int_distribution<int64_t> dist(0, 599999999);
      for (int i = 0; i < 10000; ++i) {
        const int64_t ms = dist(rng);
        ASSERT_EQ(parse_duration(format_duration(ms)), ms) << format_duration(ms);
      }
    }
  });
}

// A spec that exercises every release feature at once: dual-mono input, a
// redaction span, long and short fragments, and a second pair.
FixtureSpec RichSpec() {
  FixtureSpec spec = TwoPairSpec();
  ConversationPlan &og = spec.conversations[0];
  og.dual_mono = true;
  og.annotations = {{"Utterance", "1", 200, 1500},  {"Utterance", "DELETE", 3000, 3400},
                    {"LittleLeft", "1.1", 100, 400}, {"LittleLeft", "1.2", 500, 800},
                    {"LittleRight", "2.1", 900, 1200}};
  ConversationPlan &re = spec.conversations[1];
  re.annotations = {{"Utterance", "1", 300, 1700},
                    {"LittleLeft", "1.1", 150, 420},
                    {"LittleLeft", "1.2", 520, 840},
                    {"LittleRight", "2.1", 950, 1280}};
  return spec;
}

// Criterion: rebuilding the same corpus yields a byte-identical tree, with
// one worker or several.
TEST(AcceptanceTest, Determinism) {
  RunCriterion("builds are byte-deterministic across runs and job counts", [] {
    TempDir tmp;
    make_fixture(RichSpec(), tmp / "in");
    build_release(Cfg(tmp / "in", tmp / "run1"));
    build_release(Cfg(tmp / "in", tmp / "run2"));
    build_release(Cfg(tmp / "in", tmp / "run3", 4));
    const auto tree1 = ReadTree(tmp / "run1");
    EXPECT_FALSE(tree1.empty());
    EXPECT_TRUE(tree1 == ReadTree(tmp / "run2"));
    EXPECT_TRUE(tree1 == ReadTree(tmp / "run3"));
  });
}

// Criterion: no released clip overlaps a DELETE span, released recordings
// are zero inside every span, and bit-identical to the source outside.
TEST(AcceptanceTest, Redaction) {
  RunCriterion("redacted spans never reach a release", [] {
    FixtureSpec spec = minimal_spec();
    spec.conversations[0].annotations = {
        {"Utterance", "1", 500, 1800},    {"Utterance", "2", 2000, 2600},
        {"Utterance", "3", 2800, 3100},   {"LittleLeft", "5.5", 1450, 1700},
        {"LittleLeft", "6.1", 3700, 3900}, {"Utterance", "DELETE", 1400, 2100},
        {"Utterance", "DELETE", 3200, 3600}};
    spec.conversations[1].annotations = {
        {"Utterance", "1", 100, 700},     {"Utterance", "2", 900, 1500},
        {"Utterance", "3", 1700, 2300},   {"LittleLeft", "5.5", 2500, 2800},
        {"LittleLeft", "6.1", 3000, 3300}};
    const std::vector<std::pair<int64_t, int64_t>> spans = {{1400, 2100}, {3200, 3600}};
    TempDir tmp;
    make_fixture(spec, tmp / "in");
    build_release(Cfg(tmp / "in", tmp / "out"));

    // Only the fragments clear of both spans survive, on both sides.
    std::set<std::string> long_ids;
    for (const CsvFragmentRow &row : ReadFragmentRows(tmp / "out/fragments-long.csv")) {
      long_ids.insert(row.id);
      if (row.id.rfind("EN_001", 0) == 0) {
        for (const auto &[s0, s1] : spans) {
          EXPECT_FALSE(OverlapsMs(row.start_ms, row.end_ms, s0, s1)) << row.id;
        }
      }
    }
    EXPECT_EQ(long_ids, (std::set<std::string>{"EN_001_3", "ES_001_3"}));
    std::set<std::string> short_ids;
    for (const CsvFragmentRow &row : ReadFragmentRows(tmp / "out/fragments-short.csv")) {
      short_ids.insert(row.id);
      if (row.id.rfind("EN_001", 0) == 0) {
        for (const auto &[s0, s1] : spans) {
          EXPECT_FALSE(OverlapsMs(row.start_ms, row.end_ms, s0, s1)) << row.id;
        }
      }
    }
    EXPECT_EQ(short_ids, (std::set<std::string>{"EN_001_6.1_L", "ES_001_6.1_L"}));

    // The recording: zero inside the spans, source-identical outside.
    WavBuffer redacted = read_wav(ReadFile(tmp / "out/recordings/EN_001.wav"));
    WavBuffer original = testdetail::SynthTone(4000, 440.0, 660.0);
    ASSERT_EQ(redacted.samples.size(), original.samples.size());
    ASSERT_EQ(redacted.channels, 2);
    int64_t bad_inside = 0;
    int64_t bad_outside = 0;
    for (int64_t frame = 0; frame < redacted.frames(); ++frame) {
      bool inside = false;
      for (const auto &[s0, s1] : spans) {
        if (frame >= ms_to_sample(s0, 44100) && frame < ms_to_sample(s1, 44100)) inside = true;
      }
      for (int ch = 0; ch < 2; ++ch) {
        const int16_t got = redacted.samples[static_cast<size_t>(frame * 2 + ch)];
        const int16_t want = original.samples[static_cast<size_t>(frame * 2 + ch)];
        if (inside && got != 0) ++bad_inside;
        if (!inside && got != want) ++bad_outside;
      }
    }
    EXPECT_EQ(bad_inside, 0);
    EXPECT_EQ(bad_outside, 0);

    // Clips come out of the redacted recording, but because they never
    // overlap a span they equal cuts of the pristine source.
    EXPECT_TRUE(ReadFile(tmp / "out/fragments-long/EN_001_3.wav") ==
                write_wav(cut(original, TimeRange{2800, 3100})));
    // The re side had no DELETE spans: its recording is untouched.
    EXPECT_TRUE(ReadFile(tmp / "out/recordings/ES_001.wav") == write_wav(original));
  });
}

// Criterion: statistics over a synthetic release reproduce the known
// construction exactly, with means within 0.05 s.
TEST(AcceptanceTest, SyntheticStats) {
  RunCriterion("release statistics match the synthetic corpus", [] {
    FixtureSpec spec = minimal_spec();
    spec.conversations[0].annotations = {{"Utterance", "1", 500, 1800},
                                         {"LittleLeft", "1.1", 100, 400},
                                         {"LittleRight", "2.1", 1000, 1600}};
    spec.conversations[1].annotations = {{"Utterance", "1", 700, 2100},
                                         {"LittleLeft", "1.1", 200, 500},
                                         {"LittleRight", "2.1", 900, 1400}};
    const OracleExpectation ex = oracle_expectation(spec);
    ASSERT_EQ(ex.long_pairs, 1);
    ASSERT_EQ(ex.short_pairs, 2);
    TempDir tmp;
    make_fixture(spec, tmp / "in");
    build_release(Cfg(tmp / "in", tmp / "out"));
    CorpusStats stats = compute_stats(tmp / "out");
    EXPECT_EQ(stats.conversations, ex.conversations);
    EXPECT_EQ(stats.participants, ex.participants);
    EXPECT_EQ(stats.long_pairs, ex.long_pairs);
    EXPECT_EQ(stats.short_pairs, ex.short_pairs);
    EXPECT_NEAR(stats.mean_long_duration_s, ex.mean_long_s, 0.05);
    EXPECT_NEAR(stats.mean_short_duration_s, ex.mean_short_s, 0.05);
    EXPECT_DOUBLE_EQ(stats.mean_long_duration_s, ex.mean_long_s);
    EXPECT_DOUBLE_EQ(stats.mean_short_duration_s, ex.mean_short_s);
    // Hand-computed: long 1300+1400 -> 1.4 s; short 300,300,600,500 -> 0.4 s.
    EXPECT_DOUBLE_EQ(stats.mean_long_duration_s, 1.4);
    EXPECT_DOUBLE_EQ(stats.mean_short_duration_s, 0.4);
  });
}

// Optional criterion: when REDIAL_PUBLISHED_INPUT points at the published
// input corpus, a fresh build reproduces its released shape.
TEST(AcceptanceTest, PublishedCorpusReproduction) {
  const char *env = std::getenv("REDIAL_PUBLISHED_INPUT");
  if (env == nullptr || *env == '\0') {
    std::printf("[ACCEPTANCE] published corpus reproduction: SKIPPED (REDIAL_PUBLISHED_INPUT unset)\n");
    std::fflush(stdout);
    GTEST_SKIP() << "REDIAL_PUBLISHED_INPUT unset";
  }
  RunCriterion("published corpus reproduction", [&] {
    TempDir tmp;
    build_release(Cfg(env, tmp / "out", 2));
    CorpusStats stats = compute_stats(tmp / "out");
    EXPECT_EQ(stats.conversations, 32);
    EXPECT_EQ(stats.participants, 60);
    EXPECT_EQ(stats.long_pairs, 815);
    EXPECT_NEAR(stats.mean_long_duration_s, 3.8, 0.05);
    EXPECT_EQ(stats.short_pairs, 1173);
    EXPECT_NEAR(stats.mean_short_duration_s, 2.3, 0.05);
  });
}

}  // namespace
}  // namespace redial
