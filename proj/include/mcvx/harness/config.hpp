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
#include <string>

#include <json.hpp>

#include "mcvx/learner.hpp"

namespace mcvx::harness {

// Experiment description. JSON schema (all keys except "family" optional):
//   {
//     "d": 5, "T": 10000, "seed": 1,
//     "family": {"generator": "random_matroid"},
//     "agent": {"kind": "random"} | {"w_star": [...]},
//     "corruption": {"strategy": "none"},
//     "learner": {"variant": "centroid", "exact_geometry": true,
//                 "exact_max_dim": 9, "fallback_samples": 2000}
//   }
struct ExperimentConfig {
  std::size_t d = 0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  nlohmann::json family;
  nlohmann::json agent = {{"kind", "random"}};
  nlohmann::json corruption = {{"strategy", "none"}};
  LearnerOptions learner;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);
  nlohmann::json to_json() const;

  // Replaces the experiment seed and every seed derived from it.
  ExperimentConfig with_seed(std::uint64_t new_seed) const;
};

// Independent deterministic sub-seeds of the experiment seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace mcvx::harness
