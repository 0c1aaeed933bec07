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

#include "mcvx/harness/trace.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "mcvx/error.hpp"
#include "mcvx/harness/descriptor.hpp"

namespace mcvx::harness {

using nlohmann::json;

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const auto& [i, j] : arcs) out.push_back({i, j});
  return out;
}

std::vector<Arc> arcs_from_json(const json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  return arcs;
}

json trace_header(const ExperimentConfig& config, const Objective& w_star) {
  return {{"type", "header"},
          {"format", kTraceFormat},
          {"config", config.to_json()},
          {"w_star", w_star.weights()}};
}

json trace_round(const ExperimentRound& round) {
  const RoundRecord& rec = round.record;
  json j = {{"type", "round"},
            {"t", rec.round},
            {"set", round.set},
            {"x", to_json(rec.observed)},
            {"x_hat", to_json(rec.proposal.action)},
            {"w_hat", rec.proposal.estimate.weights()},
            {"gap", static_cast<double>(rec.gap.value_or(0.0L))},
            {"cum_regret", static_cast<double>(round.cumulative_regret)},
            {"arcs", arcs_to_json(rec.arcs_before)},
            {"new_arcs", arcs_to_json(rec.outcome.new_arcs)},
            {"new_arc_count", rec.outcome.new_arcs.size()},
            {"mistake", rec.outcome.mistake},
            {"corrupted", round.corrupted},
            {"restarted", rec.outcome.restarted},
            {"cycle", rec.outcome.cycle_detected},
            {"segment", rec.segment}};
  if (round.corruption_skipped) j["corruption_skipped"] = true;
  if (rec.volume) j["volume"] = rec.volume->to_string();
  if (rec.volume_next) j["volume_next"] = rec.volume_next->to_string();
  return j;
}

json trace_summary(const RegretLedger& ledger) { return ledger.summary(); }

std::vector<json> read_trace(std::istream& in) {
  std::vector<json> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw TraceError("trace line " + std::to_string(number) +
                       " is not JSON: " + e.what());
    }
  }
  if (lines.empty() || lines.front().value("type", "") != "header" ||
      lines.front().value("format", "") != kTraceFormat) {
    throw TraceError("trace does not start with a header record");
  }
  return lines;
}

std::vector<json> read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot open trace " + path);
  return read_trace(in);
}

void write_figure_csv(const std::vector<json>& trace, std::ostream& out) {
  out << "round,cum_regret,mistakes,volume_log,restart_flag\n";
  std::size_t mistakes = 0;
  for (const json& rec : trace) {
    if (rec.value("type", "") != "round") continue;
    if (rec.at("mistake").get<bool>()) ++mistakes;
    const bool restarted = rec.at("restarted").get<bool>();
    out << rec.at("t").get<std::size_t>() << ','
        << json(rec.at("cum_regret").get<double>()).dump() << ',' << mistakes
        << ',';
    if (restarted) {
      out << "0";
    } else if (rec.contains("volume_next")) {
      const Volume v = Volume::parse(rec.at("volume_next").get<std::string>());
      out << json(static_cast<double>(std::log(v.value()))).dump();
    } else {
      out << "nan";
    }
    out << ',' << (restarted ? 1 : 0) << '\n';
  }
}

}  // namespace mcvx::harness
