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

#include "mcvx/harness/experiment.hpp"

#include <algorithm>
#include <ostream>

#include "mcvx/error.hpp"
#include "mcvx/harness/agent.hpp"
#include "mcvx/harness/descriptor.hpp"
#include "mcvx/harness/sequence.hpp"
#include "mcvx/harness/trace.hpp"

namespace mcvx::harness {

using nlohmann::json;

std::size_t RegretLedger::max_segment_mistakes() const {
  return *std::max_element(segment_mistakes.begin(), segment_mistakes.end());
}

json RegretLedger::summary() const {
  return {{"type", "summary"},
          {"T", gaps.size()},
          {"R_T", static_cast<double>(regret)},
          {"R_star_T", static_cast<double>(regret_star)},
          {"G_max", static_cast<double>(max_gap)},
          {"mistakes", mistakes},
          {"restarts", restarts},
          {"cycle_detections", cycle_detections},
          {"realized_C", realized_corruptions},
          {"skipped_corruptions", skipped_corruptions},
          {"segment_mistakes", segment_mistakes}};
}

namespace {

void emit(std::ostream* out, const json& line) {
  if (out != nullptr) *out << line.dump() << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RunOptions& options) {
  SequenceGenerator sequence(config.family, config.d, derive_seed(config.seed, 1));
  AgentSpec spec = agent_from_json(config.agent, config.d,
                                   derive_seed(config.seed, 2),
                                   sequence.l1_radius_bound());
  CorruptionPlan plan =
      CorruptionPlan::from_json(config.corruption, derive_seed(config.seed, 4));
  Agent agent(spec, plan, config.horizon);
  Learner learner(config.d, config.learner);

  ExperimentResult result;
  result.w_star = spec.w_star;
  RegretLedger& ledger = result.ledger;
  const Objective& w = agent.w_star();
  const Objective w_neg = w.negated();

  emit(options.trace, trace_header(config, w));
  for (std::size_t t = 1; t <= config.horizon; ++t) {
    const MConvexSet set = sequence.next();
    const AgentAction action = agent.act(set, t, learner.arcs());

    ExperimentRound round;
    if (options.trace != nullptr || options.keep_rounds) round.set = describe(set);
    try {
      round.record = learner.run_round(set, action.point, &w);
    } catch (const ProtocolViolation& e) {
      emit(options.trace, {{"type", "error"}, {"t", t}, {"message", e.what()}});
      throw;
    }
    const RoundRecord& rec = round.record;

    const Point best = argmax_exchange(set, w);
    const Point worst = argmax_exchange(set, w_neg);
    const long double best_value = w.value(best);
    ledger.max_gap = std::max(ledger.max_gap, best_value - w.value(worst));
    round.corrupted = w.value(action.point) < best_value;
    round.corruption_skipped = action.skipped;
    if (round.corrupted) ++ledger.realized_corruptions;
    if (action.skipped) ++ledger.skipped_corruptions;

    const long double gap = *rec.gap;
    ledger.gaps.push_back(gap);
    ledger.regret += gap;
    ledger.regret_star += best_value - w.value(rec.proposal.action);
    if (rec.outcome.mistake) {
      ++ledger.mistakes;
      ++ledger.segment_mistakes.back();
    }
    if (rec.outcome.cycle_detected) ++ledger.cycle_detections;
    if (rec.outcome.restarted) {
      ++ledger.restarts;
      ledger.segment_mistakes.push_back(0);
    }
    round.cumulative_regret = ledger.regret;

    emit(options.trace, trace_round(round));
    if (options.keep_rounds) result.rounds.push_back(std::move(round));
  }
  emit(options.trace, trace_summary(ledger));
  return result;
}

}  // namespace mcvx::harness
