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
#include <string>
#include <string_view>
#include <vector>

#include "mcvx/geometry.hpp"
#include "mcvx/linopt.hpp"
#include "mcvx/mconvex.hpp"
#include "mcvx/orderstate.hpp"

namespace mcvx {

enum class LearnerVariant {
  kTopo,        // topological weights, at most d(d-1)/2 mistakes
  kCentroid,    // centroid of the order polytope, ~log d! mistakes
  kRobust,      // centroid + restart on a directed cycle
  kRobustTopo,  // experimental: topological weights + restart
};

std::string to_string(LearnerVariant variant);
LearnerVariant parse_variant(std::string_view name);  // throws Error

bool uses_centroid(LearnerVariant variant);
bool restarts_on_cycle(LearnerVariant variant);

struct LearnerOptions {
  LearnerVariant variant = LearnerVariant::kCentroid;
  // When false (or d above the exact bound) centroid variants estimate the
  // centroid by hit-and-run and volumes are not tracked.
  bool exact_geometry = true;
  GeometryOptions geometry;
  std::size_t fallback_samples = 2000;
  std::uint64_t seed = 0;
};

struct Proposal {
  Objective estimate;  // w_hat_t, distinct components
  Point action;        // x_hat_t, the unique maximizer of w_hat_t over X_t
};

struct RoundOutcome {
  std::vector<Arc> new_arcs;
  bool mistake = false;  // x_hat_t != x_t
  bool cycle_detected = false;
  bool restarted = false;
};

struct RoundRecord {
  std::size_t round = 0;  // 1-based
  Proposal proposal;
  Point observed;
  std::vector<Arc> arcs_before;  // A_t
  RoundOutcome outcome;
  std::size_t segment = 0;  // segment the round belongs to
  std::optional<Volume> volume;       // Vol(P_t)
  std::optional<Volume> volume_next;  // Vol of A_t + new arcs, 0 if cyclic
  std::optional<long double> gap;     // <w*, x_t - x_hat_t>
};

// Online learner over a stream of M-convex sets. Never sees w*.
class Learner {
 public:
  Learner(std::size_t d, LearnerOptions options);

  std::size_t dimension() const { return arcs_.dimension(); }
  const LearnerOptions& options() const { return options_; }
  const ArcSet& arcs() const { return arcs_; }
  std::size_t restarts() const { return arcs_.segment(); }
  std::size_t mistakes() const { return mistakes_; }
  std::size_t rounds() const { return rounds_; }
  bool exact_geometry_active() const { return exact_active_; }

  // Estimate for the current arc set (depends only on past observations).
  const Objective& estimate();
  // Vol(P_t); empty when exact geometry is inactive.
  std::optional<Volume> volume();

  // w_hat_t and x_hat_t = argmax over X_t. Throws CyclicArcs when a
  // non-restarting variant has been fed contradictory feedback.
  Proposal propose(const MConvexSet& set);

  // Adds the exchange neighbors of x_t to the arc set; restarting variants
  // clear it on a cycle. Throws ProtocolViolation if x_t is not in X_t.
  RoundOutcome observe(const MConvexSet& set, const Point& observed);

  // propose + observe with bookkeeping. w_star, when given, is used only to
  // fill the gap field.
  RoundRecord run_round(const MConvexSet& set, const Point& observed,
                        const Objective* w_star = nullptr);

 private:
  void refresh();

  LearnerOptions options_;
  ArcSet arcs_;
  bool exact_active_ = false;
  bool dirty_ = true;
  bool inconsistent_ = false;
  Objective estimate_;
  std::optional<Volume> volume_;
  std::optional<Proposal> pending_;
  std::size_t mistakes_ = 0;
  std::size_t rounds_ = 0;
  std::uint64_t estimates_computed_ = 0;
};

// ceil(log_{e/(e-1)} d!): per-segment mistake bound of the centroid learners.
std::size_t centroid_mistake_bound(std::size_t d);
// d(d-1)/2: mistake bound of the topological learner.
std::size_t topo_mistake_bound(std::size_t d);

}  // namespace mcvx
