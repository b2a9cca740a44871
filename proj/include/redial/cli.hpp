// redial/cli.hpp
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
// Command-line front end: validate / build / stats. Human-readable output
// goes to stderr, machine-readable output (the stats table) to stdout.
// Exit codes: 0 success (warnings included), 1 usage error, 2 strict-mode
// diagnostics or a processing failure.

#ifndef REDIAL_CLI_HPP_
#define REDIAL_CLI_HPP_

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "redial/errors.hpp"
#include "redial/io.hpp"
#include "redial/release.hpp"
#include "redial/validate.hpp"

namespace redial {

inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout,
                   std::ostream &err = std::cerr) {
  CLI::App app{"Builds validated releases of paired original/re-enacted dialog recordings"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string report;
  bool strict = false;
  int jobs = 1;

  CLI::App *cmd_validate = app.add_subcommand("validate", "Check a corpus and report problems");
  cmd_validate->add_option("input", input, "Corpus directory (metadata CSVs + recordings/)")
      ->required();
  cmd_validate->add_option("--report", report, "Write the diagnostics as CSV to this path");

  CLI::App *cmd_build = app.add_subcommand("build", "Write a release from a corpus");
  cmd_build->add_option("input", input, "Corpus directory (metadata CSVs + recordings/)")
      ->required();
  cmd_build->add_option("output", output, "Directory to create the release in")->required();
  cmd_build->add_flag("--strict", strict, "Fail without writing if validation reports anything");
  cmd_build->add_option("--report", report, "Write the diagnostics as CSV to this path");
  cmd_build->add_option("--jobs", jobs, "Worker threads for audio processing");

  CLI::App *cmd_stats = app.add_subcommand("stats", "Summarize a built release");
  cmd_stats->add_option("release", input, "Release directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);  // --help / --version
    }
    (void)app.exit(e, out, err);
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_validate)) {
      LoadedCorpus loaded = load_corpus(input);
      ValidationResult validation = validate_corpus(loaded.corpus, loaded.markups);
      for (const auto &d : validation.diagnostics) err << render_human(d) << '\n';
      if (!report.empty()) WriteFile(report, render_report_csv(validation.diagnostics));
      err << "validated " << loaded.corpus.conversations.size() << " conversation(s): "
          << validation.diagnostics.size() << " diagnostic(s)\n";
      return 0;
    }

    if (app.got_subcommand(cmd_build)) {
      ReleaseConfig cfg;
      cfg.input_dir = input;
      cfg.output_dir = output;
      cfg.jobs = jobs;
      check_release_config(cfg);
      LoadedCorpus loaded = load_corpus(cfg.input_dir);
      ValidationResult validation = validate_corpus(loaded.corpus, loaded.markups);
      for (const auto &d : validation.diagnostics) err << render_human(d) << '\n';
      if (!report.empty()) WriteFile(report, render_report_csv(validation.diagnostics));
      if (strict && !validation.diagnostics.empty()) {
        err << "error: strict mode: validation reported " << validation.diagnostics.size()
            << " diagnostic(s); nothing written\n";
        return 2;
      }
      ReleaseManifest manifest = build_release(cfg, loaded, validation);
      for (const auto &w : manifest.warnings) err << "warning: " << w << '\n';
      err << "wrote " << output << ": " << manifest.included_conversations.size()
          << " conversation(s), " << manifest.long_clips << " long clip(s), "
          << manifest.short_clips << " short clip(s), " << manifest.concatenations
          << " concatenation(s)\n";
      return 0;
    }

    CorpusStats stats = compute_stats(input);
    for (const auto &w : stats.warnings) err << "warning: " << w << '\n';
    out << render_stats_csv(stats);
    return 0;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace redial

#endif  // REDIAL_CLI_HPP_
