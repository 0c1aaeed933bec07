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

#include "mcvx/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "mcvx/error.hpp"
#include "mcvx/harness/experiment.hpp"

namespace mcvx::harness {

using nlohmann::json;

SweepGrid SweepGrid::from_config(const json& sweep, const ExperimentConfig& base) {
  SweepGrid grid;
  try {
    grid.dims = sweep.value("d", std::vector<std::size_t>{base.d});
    const std::size_t base_level =
        base.corruption.value("C", std::size_t{0});
    grid.levels = sweep.value("C", std::vector<std::size_t>{base_level});
    const auto names = sweep.value(
        "variants", std::vector<std::string>{mcvx::to_string(base.learner.variant)});
    for (const auto& n : names) grid.variants.push_back(parse_variant(n));
    grid.seeds = sweep.value("seeds", std::size_t{1});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed sweep block: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (grid.dims.empty() || grid.levels.empty() || grid.variants.empty() ||
      grid.seeds == 0) {
    throw ConfigError("sweep grid has an empty axis");
  }
  for (std::size_t d : grid.dims) {
    if (d == 0) throw ConfigError("sweep dimension must be positive");
  }
  return grid;
}

ExperimentConfig sweep_cell_config(const ExperimentConfig& base, std::size_t d,
                                   std::size_t level, LearnerVariant variant,
                                   std::uint64_t seed) {
  ExperimentConfig cfg = base.with_seed(seed);
  cfg.d = d;
  cfg.learner.variant = variant;
  // A fixed w* cannot follow a change of dimension.
  if (cfg.agent.contains("w_star") && cfg.agent.at("w_star").size() != d) {
    cfg.agent = {{"kind", "random"}};
  }
  std::string strategy = base.corruption.value("strategy", std::string("none"));
  if (strategy == "none" || strategy == "fixed_rounds") strategy = "second_best";
  if (level == 0) {
    cfg.corruption = {{"strategy", "none"}};
  } else {
    cfg.corruption = {{"strategy", strategy}, {"C", level}};
  }
  return cfg;
}

namespace {

SweepRow run_cell(const ExperimentConfig& cfg, std::size_t level,
                  const std::optional<std::string>& trace_dir) {
  ExperimentResult result;
  if (trace_dir) {
    const std::string name = "trace_d" + std::to_string(cfg.d) + "_C" +
                             std::to_string(level) + "_" +
                             mcvx::to_string(cfg.learner.variant) + "_s" +
                             std::to_string(cfg.seed) + ".jsonl";
    std::ofstream out(std::filesystem::path(*trace_dir) / name);
    if (!out) throw Error("cannot write trace in " + *trace_dir);
    result = run_experiment(cfg, {&out, false});
  } else {
    result = run_experiment(cfg);
  }
  const RegretLedger& l = result.ledger;
  SweepRow row;
  row.d = cfg.d;
  row.level = level;
  row.variant = cfg.learner.variant;
  row.seed = cfg.seed;
  row.horizon = cfg.horizon;
  row.mistakes = l.mistakes;
  row.restarts = l.restarts;
  row.cycle_detections = l.cycle_detections;
  row.realized_corruptions = l.realized_corruptions;
  row.regret = l.regret;
  row.regret_star = l.regret_star;
  row.max_gap = l.max_gap;
  row.max_segment_mistakes = l.max_segment_mistakes();
  row.mistake_bound = uses_centroid(cfg.learner.variant)
                          ? centroid_mistake_bound(cfg.d)
                          : topo_mistake_bound(cfg.d);
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const SweepGrid& grid,
                                unsigned threads,
                                const std::optional<std::string>& trace_dir) {
  struct Cell {
    ExperimentConfig cfg;
    std::size_t level;
  };
  std::vector<Cell> cells;
  cells.reserve(grid.size());
  for (std::size_t d : grid.dims) {
    for (std::size_t c : grid.levels) {
      for (LearnerVariant v : grid.variants) {
        for (std::size_t s = 0; s < grid.seeds; ++s) {
          cells.push_back({sweep_cell_config(base, d, c, v, base.seed + s), c});
        }
      }
    }
  }
  if (trace_dir) std::filesystem::create_directories(*trace_dir);

  std::vector<SweepRow> rows(cells.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));

  // Each worker owns its runs; the only shared state is the cell cursor and
  // the first error.
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = cursor++; i < cells.size(); i = cursor++) {
      try {
        rows[i] = run_cell(cells[i].cfg, cells[i].level, trace_dir);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor = cells.size();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "d,C,variant,seed,T,mistakes,restarts,cycle_detections,realized_C,"
         "regret,regret_star,g_max,max_segment_mistakes,mistake_bound\n";
  auto number = [](long double v) { return json(static_cast<double>(v)).dump(); };
  for (const SweepRow& r : rows) {
    out << r.d << ',' << r.level << ',' << mcvx::to_string(r.variant) << ','
        << r.seed << ',' << r.horizon << ',' << r.mistakes << ',' << r.restarts
        << ',' << r.cycle_detections << ',' << r.realized_corruptions << ','
        << number(r.regret) << ',' << number(r.regret_star) << ','
        << number(r.max_gap) << ',' << r.max_segment_mistakes << ','
        << r.mistake_bound << '\n';
  }
}

}  // namespace mcvx::harness
