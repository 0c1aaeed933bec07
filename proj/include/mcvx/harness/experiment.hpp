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
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "mcvx/harness/config.hpp"
#include "mcvx/learner.hpp"

namespace mcvx::harness {

// Regret accounting; lives outside the learner, which never sees w*.
struct RegretLedger {
  std::vector<long double> gaps;  // <w*, x_t - x_hat_t>
  long double regret = 0.0L;       // R_T
  long double regret_star = 0.0L;  // against optimal actions x*_t
  long double max_gap = 0.0L;      // G_max: max over t of the value range on X_t
  std::size_t mistakes = 0;
  std::size_t restarts = 0;
  std::size_t cycle_detections = 0;
  std::size_t realized_corruptions = 0;  // rounds with suboptimal x_t
  std::size_t skipped_corruptions = 0;   // requested on singleton sets
  std::vector<std::size_t> segment_mistakes{0};

  std::size_t max_segment_mistakes() const;
  nlohmann::json summary() const;
};

struct ExperimentRound {
  RoundRecord record;
  bool corrupted = false;
  bool corruption_skipped = false;
  long double cumulative_regret = 0.0L;
  nlohmann::json set;  // descriptor of X_t
};

struct ExperimentResult {
  RegretLedger ledger;
  Objective w_star;
  std::vector<ExperimentRound> rounds;  // filled when keep_rounds
};

struct RunOptions {
  std::ostream* trace = nullptr;  // JSON-lines trace sink
  bool keep_rounds = false;
};

// Runs T rounds of propose -> agent_act -> observe. Deterministic given the
// config (including its seed). ProtocolViolation aborts the run after a
// diagnostic record is written to the trace.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RunOptions& options = {});

}  // namespace mcvx::harness
