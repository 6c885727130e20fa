// Copyright 2026 The Mover-Eater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mover_eater/cli.hpp"

namespace {

// Primary output goes to --out when given, otherwise to stdout. Secondary
// diagnostics move to stderr whenever the primary stream is stdout, so piped
// CSV/JSON output stays clean.
struct OutputPlan {
  std::ofstream file;
  std::ostream* primary = nullptr;
  std::ostream* secondary = nullptr;

  explicit OutputPlan(const std::string& out_path) {
    if (out_path.empty()) {
      primary = &std::cout;
      secondary = &std::cerr;
    } else {
      file.open(out_path);
      if (!file)
        throw mover_eater::ConfigError("cannot open output file: " + out_path);
      primary = &file;
      secondary = &std::cout;
    }
  }
};

struct CommandArgs {
  std::string config_path;
  std::string out_path;
  bool simulate = false;
  bool decimal = false;
  int slack = -1;              // -1: use the config value
  std::int64_t budget = -1;    // -1: use the config value
  std::int64_t seed = 0;       // reserved; everything is deterministic

  mover_eater::CliOptions options() const {
    mover_eater::CliOptions opt;
    opt.simulate = simulate;
    opt.decimal = decimal;
    if (slack >= 0) opt.slack = slack;
    if (budget >= 0) opt.budget = budget;
    return opt;
  }
};

void add_common_flags(CLI::App* cmd, CommandArgs& args) {
  cmd->add_option("--config", args.config_path, "Scenario JSON file")
      ->required();
  cmd->add_option("--out", args.out_path, "Write primary output to this file");
  cmd->add_option("--seed", args.seed,
                  "Reserved; play is deterministic and ignores it");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic engine, equilibrium strategies, and verification "
      "toolkit for the two-goal Mover-Eater game"};
  app.require_subcommand(1);

  CommandArgs args;

  CLI::App* play =
      app.add_subcommand("play", "Play one game and print its summary");
  add_common_flags(play, args);

  CLI::App* value_map = app.add_subcommand(
      "value-map", "Closed-form value map over the window as CSV");
  add_common_flags(value_map, args);
  value_map->add_flag("--simulate", args.simulate,
                      "Recompute every cell by simulation and compare");
  value_map->add_flag("--decimal", args.decimal,
                      "Render values as decimal bananas instead of half-units");
  value_map->add_option("--budget", args.budget,
                        "Cell/search allowance override");

  CLI::App* compare = app.add_subcommand(
      "compare-paths",
      "Tabulate equilibrium, explicit-first, and exaggeration paths");
  add_common_flags(compare, args);
  compare->add_flag("--decimal", args.decimal,
                    "Render values as decimal bananas instead of half-units");

  CLI::App* verify = app.add_subcommand(
      "verify", "Audit the equilibrium by exhaustive deviation search");
  add_common_flags(verify, args);
  verify->add_option("--slack", args.slack,
                     "Extra Mover path length explored by the search");
  verify->add_option("--budget", args.budget, "Search-node allowance");

  CLI::App* classify = app.add_subcommand(
      "classify-map", "Region and step-count map over the window as CSV");
  add_common_flags(classify, args);
  classify->add_option("--budget", args.budget, "Cell allowance override");

  CLI11_PARSE(app, argc, argv);

  try {
    const mover_eater::ScenarioConfig config =
        mover_eater::load_config(args.config_path);
    const mover_eater::CliOptions options = args.options();

    if (play->parsed()) {
      std::ofstream transcript_file;
      std::ostream* transcript_out = nullptr;
      if (!args.out_path.empty()) {
        transcript_file.open(args.out_path);
        if (!transcript_file)
          throw mover_eater::ConfigError("cannot open output file: " +
                                         args.out_path);
        transcript_out = &transcript_file;
      }
      return mover_eater::cmd_play(config, options, std::cout, transcript_out);
    }
    if (value_map->parsed()) {
      OutputPlan out(args.out_path);
      return mover_eater::cmd_value_map(config, options, *out.primary,
                                        *out.secondary);
    }
    if (compare->parsed()) {
      OutputPlan out(args.out_path);
      return mover_eater::cmd_compare_paths(config, options, *out.primary,
                                            *out.secondary);
    }
    if (verify->parsed()) {
      OutputPlan out(args.out_path);
      return mover_eater::cmd_verify(config, options, *out.primary,
                                     *out.secondary);
    }
    if (classify->parsed()) {
      OutputPlan out(args.out_path);
      return mover_eater::cmd_classify_map(config, options, *out.primary);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
