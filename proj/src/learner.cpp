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

#include "mcvx/learner.hpp"

#include <cmath>

#include "mcvx/error.hpp"

namespace mcvx {

std::string to_string(LearnerVariant variant) {
  switch (variant) {
    case LearnerVariant::kTopo:
      return "topo";
    case LearnerVariant::kCentroid:
      return "centroid";
    case LearnerVariant::kRobust:
      return "robust";
    case LearnerVariant::kRobustTopo:
      return "robust_topo";
  }
  return "unknown";
}

LearnerVariant parse_variant(std::string_view name) {
  if (name == "topo") return LearnerVariant::kTopo;
  if (name == "centroid") return LearnerVariant::kCentroid;
  if (name == "robust") return LearnerVariant::kRobust;
  if (name == "robust_topo") return LearnerVariant::kRobustTopo;
  throw Error("unknown learner variant: " + std::string(name));
}

bool uses_centroid(LearnerVariant variant) {
  return variant == LearnerVariant::kCentroid || variant == LearnerVariant::kRobust;
}

bool restarts_on_cycle(LearnerVariant variant) {
  return variant == LearnerVariant::kRobust ||
         variant == LearnerVariant::kRobustTopo;
}

std::size_t centroid_mistake_bound(std::size_t d) {
  const long double log_factorial = std::lgamma(static_cast<long double>(d) + 1);
  const long double base = 1.0L - std::log(std::exp(1.0L) - 1.0L);  // ln(e/(e-1))
  return static_cast<std::size_t>(std::ceil(log_factorial / base));
}

std::size_t topo_mistake_bound(std::size_t d) { return d * (d - 1) / 2; }

Learner::Learner(std::size_t d, LearnerOptions options)
    : options_(options), arcs_(d) {
  if (d == 0) throw Error("learner dimension must be positive");
  exact_active_ = options_.exact_geometry &&
                  d <= std::min(options_.geometry.exact_max_dim, kMaxExactDimension);
}

void Learner::refresh() {
  if (!dirty_) return;
  if (inconsistent_) {
    throw CyclicArcs(
        "observed actions are inconsistent with every objective; a restarting "
        "variant is required under corrupted feedback");
  }
  const bool centroid = uses_centroid(options_.variant);
  if (exact_active_) {
    OrderPolytope polytope(arcs_, options_.geometry);
    volume_ = polytope.volume();
    estimate_ = centroid ? polytope.tie_broken_centroid()
                         : topological_weights(arcs_);
  } else {
    volume_.reset();
    if (centroid) {
      OrderPolytope polytope(arcs_, options_.geometry);
      // Stream index keeps the estimate a function of (seed, history).
      const std::uint64_t stream =
          options_.seed * 0x9E3779B97F4A7C15ULL + estimates_computed_;
      estimate_ =
          polytope.approximate_tie_broken_centroid(stream, options_.fallback_samples);
    } else {
      estimate_ = topological_weights(arcs_);
    }
  }
  ++estimates_computed_;
  dirty_ = false;
}

const Objective& Learner::estimate() {
  refresh();
  return estimate_;
}

std::optional<Volume> Learner::volume() {
  refresh();
  return volume_;
}

Proposal Learner::propose(const MConvexSet& set) {
  if (set.dimension() != dimension()) {
    throw DimensionMismatch("feasible set dimension differs from learner's");
  }
  refresh();
  Proposal proposal{estimate_, argmax_exchange(set, estimate_)};
  pending_ = proposal;
  return proposal;
}

RoundOutcome Learner::observe(const MConvexSet& set, const Point& observed) {
  if (set.dimension() != dimension() || observed.dimension() != dimension()) {
    throw DimensionMismatch("observation dimension differs from learner's");
  }
  if (!set.contains(observed)) {
    throw ProtocolViolation("observed action " + to_string(observed) +
                            " is not in the feasible set");
  }
  if (!pending_) propose(set);
  RoundOutcome outcome;
  outcome.mistake = pending_->action != observed;
  pending_.reset();
  ++rounds_;
  if (outcome.mistake) ++mistakes_;

  const auto pairs = set.exchange_neighbors(observed);
  outcome.new_arcs = arcs_.add_arcs(pairs);
  if (!outcome.new_arcs.empty()) {
    dirty_ = true;
    if (arcs_.has_cycle()) {
      outcome.cycle_detected = true;
      if (restarts_on_cycle(options_.variant)) {
        arcs_.restart();
        outcome.restarted = true;
      } else {
        inconsistent_ = true;
      }
    }
  }
  return outcome;
}

RoundRecord Learner::run_round(const MConvexSet& set, const Point& observed,
                               const Objective* w_star) {
  RoundRecord record;
  record.round = rounds_ + 1;
  record.segment = arcs_.segment();
  record.arcs_before = arcs_.arcs();
  record.proposal = propose(set);
  record.volume = volume_;
  record.observed = observed;

  record.outcome = observe(set, observed);
  if (exact_active_) {
    if (record.outcome.new_arcs.empty()) {
      record.volume_next = record.volume;
    } else if (record.outcome.cycle_detected) {
      record.volume_next = Volume{0, factorial(dimension())};
    } else {
      record.volume_next = OrderPolytope(arcs_, options_.geometry).volume();
    }
  }
  if (w_star != nullptr) {
    record.gap = w_star->value(observed) - w_star->value(record.proposal.action);
  }
  return record;
}

}  // namespace mcvx
