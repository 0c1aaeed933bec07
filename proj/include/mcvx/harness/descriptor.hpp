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

#include <json.hpp>

#include "mcvx/mconvex.hpp"

namespace mcvx::harness {

// Instance descriptors, e.g.
//   {"family": "uniform_matroid", "d": 4, "m": 2}
//   {"family": "graphic_matroid", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}
//   {"family": "partition_matroid", "blocks": [[0,1],[2]], "capacities": [1,1], "m": 2}
//   {"family": "lattice_simplex", "d": 3, "D": 2, "m": 2}
//   {"family": "segment_embed", "d": 16, "k": 1, "axis": 0}
//   {"family": "explicit", "d": 3, "points": [[1,0,0],[0,1,0]]}
nlohmann::json describe(const MConvexSet& set);

// Throws ConfigError on unknown families or invalid parameters.
MConvexSet set_from_json(const nlohmann::json& descriptor);

nlohmann::json to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

}  // namespace mcvx::harness
