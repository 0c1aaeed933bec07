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
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <json.hpp>

#include "mcvx/linopt.hpp"
#include "mcvx/mconvex.hpp"
#include "mcvx/orderstate.hpp"

namespace mcvx::harness {

// Hidden objective of the agent. Components are pairwise distinct.
struct AgentSpec {
  Objective w_star;
};

// Uniform in (0,1)^d, redrawn until every pairwise gap is at least 1e-6, then
// divided by max(1, l1_radius) so the per-round gap stays below one.
AgentSpec random_agent(std::size_t d, std::uint64_t seed, double l1_radius);

// {"kind": "random"} or {"w_star": [...]}.
AgentSpec agent_from_json(const nlohmann::json& spec, std::size_t d,
                          std::uint64_t seed, double l1_radius);

enum class CorruptionStrategy {
  kNone,
  kRandomRounds,  // C random rounds, uniformly random suboptimal action
  kFixedRounds,   // listed rounds, second-best action
  kSecondBest,    // C random rounds, second-best action
  kCycleHiding,   // C random rounds, action chosen to postpone cycles
};

// {"strategy": "none"}
// {"strategy": "random_rounds", "C": 3, "seed": 7}
// {"strategy": "fixed_rounds", "rounds": [2]}       (1-based)
// {"strategy": "second_best", "C": 3}
// {"strategy": "cycle_hiding", "C": 3}
struct CorruptionPlan {
  CorruptionStrategy strategy = CorruptionStrategy::kNone;
  std::size_t level = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> rounds;

  static CorruptionPlan from_json(const nlohmann::json& spec,
                                  std::uint64_t experiment_seed);
  nlohmann::json to_json() const;

  // 1-based rounds that will be corrupted for horizon T.
  std::set<std::size_t> target_rounds(std::size_t horizon) const;
};

struct AgentAction {
  Point point;
  bool corrupted = false;  // point is suboptimal for w*
  bool skipped = false;    // corruption requested but impossible (singleton)
};

// Best exchange neighbor of the maximizer: a best point strictly below the
// optimum. Empty for singletons.
std::optional<Point> second_best(const MConvexSet& set, const Objective& w,
                                 const Point& optimum);

class Agent {
 public:
  Agent(AgentSpec spec, CorruptionPlan plan, std::size_t horizon);

  const Objective& w_star() const { return spec_.w_star; }
  const CorruptionPlan& plan() const { return plan_; }

  // Optimal action, or a feasible suboptimal one on a corrupted round.
  // learner_arcs is the learner's current arc set (used by cycle hiding).
  AgentAction act(const MConvexSet& set, std::size_t round,
                  const ArcSet& learner_arcs);

 private:
  std::optional<Point> random_suboptimal(const MConvexSet& set,
                                         const Point& optimum);
  std::optional<Point> cycle_hiding(const MConvexSet& set, const Point& optimum,
                                    const ArcSet& learner_arcs) const;

  AgentSpec spec_;
  CorruptionPlan plan_;
  std::set<std::size_t> targets_;
  std::mt19937_64 rng_;
};

}  // namespace mcvx::harness
