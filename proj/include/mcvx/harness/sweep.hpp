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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcvx/harness/config.hpp"
#include "mcvx/learner.hpp"

namespace mcvx::harness {

// Grid over dimension, corruption level and learner variant, with `seeds`
// consecutive seeds per cell starting at the base config's seed. Read from
// the "sweep" key of a config:
//   "sweep": {"d": [3, 4], "C": [0, 1, 3], "variants": ["robust"], "seeds": 20}
// Missing axes fall back to the base config. The corruption strategy comes
// from the base config ("second_best" when it is "none"); level C = 0 runs
// uncorrupted.
struct SweepGrid {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> levels;
  std::vector<LearnerVariant> variants;
  std::size_t seeds = 1;

  static SweepGrid from_config(const nlohmann::json& sweep,
                               const ExperimentConfig& base);
  std::size_t size() const {
    return dims.size() * levels.size() * variants.size() * seeds;
  }
};

struct SweepRow {
  std::size_t d = 0;
  std::size_t level = 0;
  LearnerVariant variant = LearnerVariant::kCentroid;
  std::uint64_t seed = 0;
  std::size_t horizon = 0;
  std::size_t mistakes = 0;
  std::size_t restarts = 0;
  std::size_t cycle_detections = 0;
  std::size_t realized_corruptions = 0;
  long double regret = 0.0L;
  long double regret_star = 0.0L;
  long double max_gap = 0.0L;
  std::size_t max_segment_mistakes = 0;
  std::size_t mistake_bound = 0;  // per segment, for the variant
};

// Config of one grid cell.
ExperimentConfig sweep_cell_config(const ExperimentConfig& base, std::size_t d,
                                   std::size_t level, LearnerVariant variant,
                                   std::uint64_t seed);

// Runs every cell, `threads` at a time (0 = hardware concurrency). Rows come
// back in grid order regardless of scheduling. When trace_dir is set each
// cell also writes its trace there.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const SweepGrid& grid,
                                unsigned threads = 0,
                                const std::optional<std::string>& trace_dir = {});

// d,C,variant,seed,T,mistakes,restarts,cycle_detections,realized_C,regret,
// regret_star,g_max,max_segment_mistakes,mistake_bound
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace mcvx::harness
