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

#include "mcvx/harness/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mcvx/error.hpp"
#include "mcvx/harness/descriptor.hpp"

namespace mcvx::harness {

using nlohmann::json;

std::vector<MConvexSet> two_action_demo_script() {
  const Point e1 = Point::unit(3, 0);
  const Point e2 = Point::unit(3, 1);
  const Point e3 = Point::unit(3, 2);
  const auto first = MConvexSet::explicit_points(3, {e1, e2});
  const auto second = MConvexSet::explicit_points(3, {e2, e3});
  return {first, second, first, second};
}

int default_segment_half_length(std::size_t base_dimension) {
  const int k = static_cast<int>(
      std::floor(std::sqrt(static_cast<double>(base_dimension)) / 4.0 + 1e-12));
  return std::max(k, 1);
}

SequenceGenerator::SequenceGenerator(const json& spec, std::size_t d,
                                     std::uint64_t seed)
    : d_(d), rng_(seed) {
  if (d == 0) throw ConfigError("dimension must be positive");
  kind_ = spec.value("generator", std::string{});
  auto require_dimension = [&](const MConvexSet& set) {
    if (set.dimension() != d_) {
      throw ConfigError("set descriptor dimension " +
                        std::to_string(set.dimension()) +
                        " differs from config d = " + std::to_string(d_));
    }
  };
  if (kind_ == "fixed") {
    script_.push_back(set_from_json(spec.at("set")));
  } else if (kind_ == "cycle") {
    for (const auto& s : spec.at("sets")) script_.push_back(set_from_json(s));
    if (script_.empty()) throw ConfigError("cycle generator needs sets");
  } else if (kind_ == "two_action_demo") {
    script_ = two_action_demo_script();
  } else if (kind_ == "random_matroid" || kind_ == "random_uniform") {
    radius_ = static_cast<double>(d_) / 2.0;
  } else if (kind_ == "random_lattice") {
    lattice_units_ = spec.value("D", 2);
    if (lattice_units_ <= 0) throw ConfigError("random_lattice: D must be positive");
    radius_ = static_cast<double>(d_) * lattice_units_ / 2.0;
  } else if (kind_ == "segment_embed") {
    if (d_ < 2) throw ConfigError("segment_embed needs d >= 2 (base d - 1)");
    segment_k_ = spec.value("k", default_segment_half_length(d_ - 1));
    if (segment_k_ <= 0) throw ConfigError("segment_embed: k must be positive");
    radius_ = 2.0 * segment_k_;
  } else {
    throw ConfigError("unknown sequence generator: '" + kind_ + "'");
  }
  if (!script_.empty()) {
    radius_ = 0.0;
    for (const auto& set : script_) {
      require_dimension(set);
      radius_ = std::max(radius_, set.l1_radius());
    }
  }
  radius_ = std::max(radius_, 1.0);
}

MConvexSet SequenceGenerator::next() {
  const std::size_t index = cursor_++;
  if (!script_.empty()) return script_[index % script_.size()];
  if (kind_ == "random_matroid") return random_matroid();
  if (kind_ == "random_uniform") {
    const std::size_t hi = d_ > 1 ? d_ - 1 : 1;
    std::uniform_int_distribution<std::size_t> rank(1, hi);
    return MConvexSet::uniform_matroid(d_, rank(rng_));
  }
  if (kind_ == "random_lattice") {
    const int total = static_cast<int>(d_) * lattice_units_;
    std::uniform_int_distribution<int> m(1, std::max(1, total - 1));
    return MConvexSet::lattice_simplex(d_, lattice_units_, m(rng_));
  }
  // segment_embed: cycle the axis over the base coordinates.
  const std::size_t base = d_ - 1;
  return MConvexSet::segment_embed(base, segment_k_, index % base);
}

MConvexSet SequenceGenerator::random_matroid() {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng_)) {
    case 0: {
      const std::size_t hi = d_ > 1 ? d_ - 1 : 1;
      std::uniform_int_distribution<std::size_t> rank(1, hi);
      return MConvexSet::uniform_matroid(d_, rank(rng_));
    }
    case 1:
      return random_partition(false);
    case 2:
      return random_graphic();
    default:
      return random_partition(d_ >= 2);
  }
}

MConvexSet SequenceGenerator::random_partition(bool pair) {
  std::vector<int> elements(d_);
  std::iota(elements.begin(), elements.end(), 0);
  std::shuffle(elements.begin(), elements.end(), rng_);
  if (pair) {
    // Two-action set {e_i, e_j}: one block of capacity one, the rest loops.
    std::vector<std::vector<int>> blocks{{elements[0], elements[1]}};
    std::vector<int> caps{1};
    if (d_ > 2) {
      blocks.emplace_back(elements.begin() + 2, elements.end());
      caps.push_back(0);
    }
    return MConvexSet::partition_matroid(std::move(blocks), std::move(caps), 1);
  }
  std::uniform_int_distribution<std::size_t> block_count(1, d_);
  const std::size_t b = block_count(rng_);
  std::uniform_int_distribution<std::size_t> which(0, b - 1);
  std::vector<std::vector<int>> blocks(b);
  for (int e : elements) blocks[which(rng_)].push_back(e);
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const auto& blk) { return blk.empty(); }),
               blocks.end());
  std::vector<int> caps;
  int total = 0;
  for (const auto& blk : blocks) {
    std::uniform_int_distribution<int> cap(0, static_cast<int>(blk.size()));
    caps.push_back(cap(rng_));
    total += caps.back();
  }
  int m = 0;
  if (total > 0) {
    std::uniform_int_distribution<int> rank(1, total);
    m = rank(rng_);
  }
  return MConvexSet::partition_matroid(std::move(blocks), std::move(caps), m);
}

MConvexSet SequenceGenerator::random_graphic() {
  std::size_t n_min = 2;
  while (n_min * (n_min - 1) / 2 < d_) ++n_min;
  std::uniform_int_distribution<std::size_t> vertices(n_min, d_ + 1);
  const std::size_t n = vertices(rng_);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng_);

  std::set<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> edges;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) return false;
    edges.emplace_back(u, v);
    return true;
  };
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    add(labels[v], labels[parent(rng_)]);
  }
  std::uniform_int_distribution<int> any(0, static_cast<int>(n) - 1);
  while (edges.size() < d_) {
    const int u = any(rng_);
    const int v = any(rng_);
    if (u != v) add(u, v);
  }
  std::shuffle(edges.begin(), edges.end(), rng_);
  return MConvexSet::graphic_matroid(n, std::move(edges));
}

}  // namespace mcvx::harness
