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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mcvx::harness {

struct Violation {
  std::size_t round = 0;  // 0 for whole-trace findings
  std::string kind;       // optimality, suggestion, estimate, gap, ...
  std::string message;
};

struct VerifyReport {
  std::size_t rounds = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(std::string_view kind) const;
  nlohmann::json to_json() const;
};

// Replays a trace against brute-force oracles that share no code path with
// the learner: exhaustive argmax for x_t (optimality under w*) and x_hat_t
// (under w_hat_t), gap and cumulative-regret arithmetic, exchange-neighbor
// arcs, permutation-count volumes, restart/cycle flags, the (1 - 1/e) shrink
// on mistake rounds of centroid learners, and the summary footer.
// Suboptimal agent actions are reported as "optimality" findings.
VerifyReport verify_trace(const std::vector<nlohmann::json>& trace);
VerifyReport verify_trace_file(const std::string& path);

}  // namespace mcvx::harness
