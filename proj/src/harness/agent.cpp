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

#include "mcvx/harness/agent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "mcvx/error.hpp"

namespace mcvx::harness {

using nlohmann::json;

AgentSpec random_agent(std::size_t d, std::uint64_t seed, double l1_radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> w(d);
  for (;;) {
    for (double& v : w) {
      do {
        v = unit(rng);
      } while (v == 0.0);
    }
    std::vector<double> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    bool separated = true;
    for (std::size_t k = 1; k < d; ++k) {
      if (sorted[k] - sorted[k - 1] < 1e-6) separated = false;
    }
    if (separated) break;
  }
  const double scale = 1.0 / std::max(1.0, l1_radius);
  return AgentSpec{Objective(std::move(w)).scaled(scale)};
}

AgentSpec agent_from_json(const json& spec, std::size_t d, std::uint64_t seed,
                          double l1_radius) {
  if (spec.contains("w_star")) {
    Objective w(spec.at("w_star").get<std::vector<double>>());
    if (w.dimension() != d) throw ConfigError("agent w_star has wrong length");
    if (!w.distinct()) throw ConfigError("agent w_star components must be distinct");
    return AgentSpec{std::move(w)};
  }
  const std::string kind = spec.value("kind", std::string("random"));
  if (kind != "random") throw ConfigError("unknown agent kind: " + kind);
  return random_agent(d, spec.value("seed", seed), l1_radius);
}

CorruptionPlan CorruptionPlan::from_json(const json& spec,
                                         std::uint64_t experiment_seed) {
  CorruptionPlan plan;
  const std::string strategy = spec.value("strategy", std::string("none"));
  plan.seed = spec.value("seed", experiment_seed ^ 0xC0FFEEULL);
  if (strategy == "none") {
    plan.strategy = CorruptionStrategy::kNone;
  } else if (strategy == "random_rounds") {
    plan.strategy = CorruptionStrategy::kRandomRounds;
  } else if (strategy == "fixed_rounds") {
    plan.strategy = CorruptionStrategy::kFixedRounds;
    plan.rounds = spec.at("rounds").get<std::vector<std::size_t>>();
    for (std::size_t r : plan.rounds) {
      if (r == 0) throw ConfigError("corruption rounds are 1-based");
    }
  } else if (strategy == "second_best") {
    plan.strategy = CorruptionStrategy::kSecondBest;
  } else if (strategy == "cycle_hiding") {
    plan.strategy = CorruptionStrategy::kCycleHiding;
  } else {
    throw ConfigError("unknown corruption strategy: " + strategy);
  }
  if (plan.strategy != CorruptionStrategy::kNone &&
      plan.strategy != CorruptionStrategy::kFixedRounds) {
    plan.level = spec.value("C", std::size_t{0});
  }
  if (plan.strategy == CorruptionStrategy::kFixedRounds) {
    plan.level = plan.rounds.size();
  }
  return plan;
}

json CorruptionPlan::to_json() const {
  switch (strategy) {
    case CorruptionStrategy::kNone:
      return {{"strategy", "none"}};
    case CorruptionStrategy::kRandomRounds:
      return {{"strategy", "random_rounds"}, {"C", level}, {"seed", seed}};
    case CorruptionStrategy::kFixedRounds:
      return {{"strategy", "fixed_rounds"}, {"rounds", rounds}};
    case CorruptionStrategy::kSecondBest:
      return {{"strategy", "second_best"}, {"C", level}, {"seed", seed}};
    case CorruptionStrategy::kCycleHiding:
      return {{"strategy", "cycle_hiding"}, {"C", level}, {"seed", seed}};
  }
  return {};
}

std::set<std::size_t> CorruptionPlan::target_rounds(std::size_t horizon) const {
  if (strategy == CorruptionStrategy::kNone || horizon == 0) return {};
  if (strategy == CorruptionStrategy::kFixedRounds) {
    std::set<std::size_t> out;
    for (std::size_t r : rounds) {
      if (r <= horizon) out.insert(r);
    }
    return out;
  }
  std::vector<std::size_t> all(horizon);
  std::iota(all.begin(), all.end(), std::size_t{1});
  std::mt19937_64 rng(seed);
  const std::size_t count = std::min(level, horizon);
  // Partial Fisher-Yates: the first `count` entries form a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, horizon - 1);
    std::swap(all[k], all[pick(rng)]);
  }
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::optional<Point> second_best(const MConvexSet& set, const Objective& w,
                                 const Point& optimum) {
  std::optional<Point> best;
  long double best_value = 0.0L;
  for (const auto& [i, j] : set.exchange_neighbors(optimum)) {
    Point y = optimum.exchanged(i, j);
    const long double value = w.value(y);
    if (!best || value > best_value || (value == best_value && y < *best)) {
      best = std::move(y);
      best_value = value;
    }
  }
  return best;
}

Agent::Agent(AgentSpec spec, CorruptionPlan plan, std::size_t horizon)
    : spec_(std::move(spec)),
      plan_(std::move(plan)),
      targets_(plan_.target_rounds(horizon)),
      rng_(plan_.seed + 1) {}

std::optional<Point> Agent::random_suboptimal(const MConvexSet& set,
                                              const Point& optimum) {
  std::vector<Point> others;
  for (Point& p : set.enumerate()) {
    if (p != optimum) others.push_back(std::move(p));
  }
  if (others.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, others.size() - 1);
  return others[pick(rng_)];
}

std::optional<Point> Agent::cycle_hiding(const MConvexSet& set,
                                         const Point& optimum,
                                         const ArcSet& learner_arcs) const {
  // Prefer actions whose revealed arcs keep the learner's graph acyclic, then
  // fewer arcs contradicting w*, then higher value.
  const Objective& w = spec_.w_star;
  std::optional<Point> best;
  std::tuple<int, std::size_t, long double> best_key{};
  for (const auto& [i, j] : set.exchange_neighbors(optimum)) {
    Point y = optimum.exchanged(i, j);
    const auto revealed = set.exchange_neighbors(y);
    ArcSet trial = learner_arcs;
    trial.add_arcs(revealed);
    const int cyclic = trial.has_cycle() ? 1 : 0;
    const std::size_t wrong = static_cast<std::size_t>(
        std::count_if(revealed.begin(), revealed.end(),
                      [&](const Arc& a) { return w[a.first] < w[a.second]; }));
    const std::tuple<int, std::size_t, long double> key{cyclic, wrong, -w.value(y)};
    if (!best || key < best_key || (key == best_key && y < *best)) {
      best = std::move(y);
      best_key = key;
    }
  }
  return best;
}

AgentAction Agent::act(const MConvexSet& set, std::size_t round,
                       const ArcSet& learner_arcs) {
  Point optimum = argmax_exchange(set, spec_.w_star);
  if (!targets_.contains(round)) return AgentAction{std::move(optimum)};

  std::optional<Point> corrupted;
  switch (plan_.strategy) {
    case CorruptionStrategy::kNone:
      break;
    case CorruptionStrategy::kRandomRounds:
      corrupted = random_suboptimal(set, optimum);
      break;
    case CorruptionStrategy::kFixedRounds:
    case CorruptionStrategy::kSecondBest:
      corrupted = second_best(set, spec_.w_star, optimum);
      break;
    case CorruptionStrategy::kCycleHiding:
      corrupted = cycle_hiding(set, optimum, learner_arcs);
      break;
  }
  if (!corrupted) return AgentAction{std::move(optimum), false, true};
  return AgentAction{std::move(*corrupted), true, false};
}

}  // namespace mcvx::harness
