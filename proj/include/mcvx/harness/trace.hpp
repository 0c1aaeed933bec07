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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcvx/harness/experiment.hpp"

namespace mcvx::harness {

// Trace file: JSON lines.
//   {"type": "header", "format": "mcvx-trace/1", "config": {...}, "w_star": [...]}
//   {"type": "round", "t": 1, "set": {...}, "x": [...], "x_hat": [...],
//    "w_hat": [...], "gap": 0.0, "cum_regret": 0.0, "arcs": [[i, j], ...],
//    "new_arcs": [...], "new_arc_count": 0, "mistake": false,
//    "corrupted": false, "restarted": false, "cycle": false, "segment": 0,
//    "volume": "L/d!", "volume_next": "L/d!"}          (volumes in exact mode)
//   {"type": "summary", "R_T": ..., "R_star_T": ..., "mistakes": ...,
//    "restarts": ..., "realized_C": ..., ...}
// Indices are 0-based; "arcs" is A_t before the round.
inline constexpr const char* kTraceFormat = "mcvx-trace/1";

nlohmann::json trace_header(const ExperimentConfig& config, const Objective& w_star);
nlohmann::json trace_round(const ExperimentRound& round);
nlohmann::json trace_summary(const RegretLedger& ledger);

nlohmann::json arcs_to_json(const std::vector<Arc>& arcs);
std::vector<Arc> arcs_from_json(const nlohmann::json& j);

// Parses every line; throws TraceError on unreadable input.
std::vector<nlohmann::json> read_trace(std::istream& in);
std::vector<nlohmann::json> read_trace_file(const std::string& path);

// CSV for plotting: round,cum_regret,mistakes,volume_log,restart_flag.
// volume_log is ln Vol(P_{t+1}) after any restart, "nan" outside exact mode.
void write_figure_csv(const std::vector<nlohmann::json>& trace, std::ostream& out);

}  // namespace mcvx::harness
