// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, verify, sweep, figure-data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcvx/error.hpp"
#include "mcvx/harness/config.hpp"
#include "mcvx/harness/experiment.hpp"
#include "mcvx/harness/sweep.hpp"
#include "mcvx/harness/trace.hpp"
#include "mcvx/harness/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mcvx::harness;

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
  std::string exact_geometry;  // "", "on" or "off"
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool need_config) {
  auto* opt = cmd->add_option("--config", flags.config, "experiment config (JSON)");
  if (need_config) opt->required();
  cmd->add_option("--seed", flags.seed, "override the config seed");
  cmd->add_option("--out", flags.out, "output directory")->capture_default_str();
  cmd->add_option("--exact-geometry", flags.exact_geometry,
                  "exact order-polytope geometry")
      ->check(CLI::IsMember({"on", "off"}));
}

ExperimentConfig load_config(const CommonFlags& flags) {
  ExperimentConfig cfg = ExperimentConfig::load(flags.config);
  if (flags.seed) cfg = cfg.with_seed(*flags.seed);
  if (!flags.exact_geometry.empty()) {
    cfg.learner.exact_geometry = flags.exact_geometry == "on";
  }
  return cfg;
}

std::ofstream open_out(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw mcvx::Error("cannot write " + path.string());
  return out;
}

int do_run(const CommonFlags& flags) {
  const ExperimentConfig cfg = load_config(flags);
  const fs::path trace_path = fs::path(flags.out) / "trace.jsonl";
  std::ofstream trace = open_out(trace_path);
  const ExperimentResult result = run_experiment(cfg, {&trace, false});
  trace.close();
  const json summary = result.ledger.summary();
  open_out(fs::path(flags.out) / "summary.json") << summary.dump(2) << '\n';
  std::cout << summary.dump() << '\n';
  std::cerr << "trace written to " << trace_path.string() << '\n';
  return 0;
}

int do_verify(const std::string& trace_path, bool expect_corruption) {
  const VerifyReport report = verify_trace_file(trace_path);
  std::size_t fatal = 0;
  for (const Violation& v : report.violations) {
    std::cout << "round " << v.round << " [" << v.kind << "] " << v.message << '\n';
    if (!(expect_corruption && v.kind == "optimality")) ++fatal;
  }
  std::cout << report.rounds << " rounds checked, " << report.violations.size()
            << " violation(s)\n";
  return fatal == 0 ? 0 : 1;
}

int do_sweep(const CommonFlags& flags, unsigned threads, bool traces) {
  const ExperimentConfig base = load_config(flags);
  std::ifstream in(flags.config);
  const json raw = json::parse(in);
  const SweepGrid grid = SweepGrid::from_config(raw.value("sweep", json::object()), base);
  std::optional<std::string> trace_dir;
  if (traces) trace_dir = (fs::path(flags.out) / "traces").string();
  const auto rows = run_sweep(base, grid, threads, trace_dir);
  const fs::path csv = fs::path(flags.out) / "sweep.csv";
  std::ofstream out = open_out(csv);
  write_sweep_csv(rows, out);
  std::cout << rows.size() << " runs written to " << csv.string() << '\n';
  return 0;
}

int do_figure_data(const CommonFlags& flags, const std::string& trace_path) {
  std::vector<json> trace;
  if (!trace_path.empty()) {
    trace = read_trace_file(trace_path);
  } else {
    if (flags.config.empty()) throw mcvx::ConfigError("need --config or --trace");
    const ExperimentConfig cfg = load_config(flags);
    std::ostringstream buffer;
    run_experiment(cfg, {&buffer, false});
    std::istringstream replay(buffer.str());
    trace = read_trace(replay);
  }
  const fs::path csv = fs::path(flags.out) / "figure.csv";
  std::ofstream out = open_out(csv);
  write_figure_csv(trace, out);
  std::cout << "figure data written to " << csv.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online inverse linear optimization over M-convex sets"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run = app.add_subcommand("run", "run an experiment and write its trace");
  add_common(run, run_flags, true);

  std::string verify_trace_path;
  bool expect_corruption = false;
  auto* verify = app.add_subcommand("verify", "audit a trace with brute-force oracles");
  verify->add_option("trace", verify_trace_path, "trace file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_flag("--expect-corruption", expect_corruption,
                   "suboptimal agent actions do not fail the audit");

  CommonFlags sweep_flags;
  unsigned threads = 0;
  bool sweep_traces = false;
  auto* sweep = app.add_subcommand("sweep", "run a grid over d, C and variant");
  add_common(sweep, sweep_flags, true);
  sweep->add_option("--threads", threads, "concurrent runs (0 = all cores)");
  sweep->add_flag("--traces", sweep_traces, "also write one trace per run");

  CommonFlags fig_flags;
  std::string fig_trace;
  auto* fig = app.add_subcommand("figure-data", "emit the plotting CSV");
  add_common(fig, fig_flags, false);
  fig->add_option("--trace", fig_trace, "existing trace instead of a fresh run")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return do_run(run_flags);
    if (*verify) return do_verify(verify_trace_path, expect_corruption);
    if (*sweep) return do_sweep(sweep_flags, threads, sweep_traces);
    if (*fig) return do_figure_data(fig_flags, fig_trace);
  } catch (const mcvx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
