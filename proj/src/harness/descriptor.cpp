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

#include "mcvx/harness/descriptor.hpp"

#include "mcvx/error.hpp"

namespace mcvx::harness {

using nlohmann::json;

json to_json(const Point& p) { return json(p.coords()); }

Point point_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("point must be an integer array");
  return Point(j.get<std::vector<int>>());
}

json describe(const MConvexSet& set) {
  struct Describer {
    json operator()(const UniformMatroid& f) const {
      return {{"family", "uniform_matroid"}, {"d", f.d}, {"m", f.m}};
    }
    json operator()(const GraphicMatroid& f) const {
      json edges = json::array();
      for (const auto& [u, v] : f.edges) edges.push_back({u, v});
      return {{"family", "graphic_matroid"},
              {"vertices", f.vertices},
              {"edges", edges}};
    }
    json operator()(const PartitionMatroid& f) const {
      return {{"family", "partition_matroid"},
              {"blocks", f.blocks},
              {"capacities", f.capacities},
              {"m", f.m}};
    }
    json operator()(const LatticeSimplex& f) const {
      return {{"family", "lattice_simplex"}, {"d", f.d}, {"D", f.D}, {"m", f.m}};
    }
    json operator()(const SegmentEmbed& f) const {
      return {{"family", "segment_embed"}, {"d", f.d}, {"k", f.k}, {"axis", f.axis}};
    }
    json operator()(const ExplicitSet& f) const {
      json points = json::array();
      for (const Point& p : f.points) points.push_back(to_json(p));
      return {{"family", "explicit"}, {"d", f.d}, {"points", points}};
    }
  };
  return std::visit(Describer{}, set.family());
}

MConvexSet set_from_json(const json& j) {
  try {
    const std::string family = j.at("family").get<std::string>();
    if (family == "uniform_matroid") {
      return MConvexSet::uniform_matroid(j.at("d").get<std::size_t>(),
                                         j.at("m").get<std::size_t>());
    }
    if (family == "graphic_matroid") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      return MConvexSet::graphic_matroid(j.at("vertices").get<std::size_t>(),
                                         std::move(edges));
    }
    if (family == "partition_matroid") {
      return MConvexSet::partition_matroid(
          j.at("blocks").get<std::vector<std::vector<int>>>(),
          j.at("capacities").get<std::vector<int>>(), j.at("m").get<int>());
    }
    if (family == "lattice_simplex") {
      return MConvexSet::lattice_simplex(j.at("d").get<std::size_t>(),
                                         j.at("D").get<int>(), j.at("m").get<int>());
    }
    if (family == "segment_embed") {
      return MConvexSet::segment_embed(j.at("d").get<std::size_t>(),
                                       j.at("k").get<int>(),
                                       j.value("axis", std::size_t{0}));
    }
    if (family == "explicit") {
      std::vector<Point> points;
      for (const auto& p : j.at("points")) points.push_back(point_from_json(p));
      return MConvexSet::explicit_points(j.at("d").get<std::size_t>(),
                                         std::move(points));
    }
    throw ConfigError("unknown set family: " + family);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed set descriptor: ") + e.what());
  } catch (const InvalidSet& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace mcvx::harness
