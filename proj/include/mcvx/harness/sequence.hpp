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
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcvx/mconvex.hpp"

namespace mcvx::harness {

// Seeded stream of feasible sets, all of ambient dimension d:
//   {"generator": "fixed", "set": <descriptor>}
//   {"generator": "cycle", "sets": [<descriptor>, ...]}
//   {"generator": "two_action_demo"}              d = 3
//   {"generator": "random_matroid"}               uniform / partition / graphic / pair
//   {"generator": "random_uniform"}               uniform matroid, random rank
//   {"generator": "random_lattice", "D": 2}
//   {"generator": "segment_embed", "k": 1}        base dimension d - 1
class SequenceGenerator {
 public:
  SequenceGenerator(const nlohmann::json& spec, std::size_t d, std::uint64_t seed);

  MConvexSet next();
  std::size_t dimension() const { return d_; }
  const std::string& kind() const { return kind_; }
  // Upper bound on max ||x - y||_1 / 2 over every set the stream can emit.
  double l1_radius_bound() const { return radius_; }

 private:
  MConvexSet random_matroid();
  MConvexSet random_partition(bool pair);
  MConvexSet random_graphic();

  std::string kind_;
  std::size_t d_;
  std::mt19937_64 rng_;
  std::vector<MConvexSet> script_;
  std::size_t cursor_ = 0;
  int lattice_units_ = 2;
  int segment_k_ = 1;
  double radius_ = 1.0;
};

// The two-action script {e1, e2}, {e2, e3}, {e1, e2}, {e2, e3} in d = 3.
std::vector<MConvexSet> two_action_demo_script();

// Default half-length for segment streams: floor(sqrt(base) / 4), at
// least 1, where base = d - 1 is the pre-embedding dimension.
int default_segment_half_length(std::size_t base_dimension);

}  // namespace mcvx::harness
