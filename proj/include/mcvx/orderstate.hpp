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
#include <span>
#include <vector>

#include "mcvx/linopt.hpp"
#include "mcvx/point.hpp"

namespace mcvx {

// Set of arcs (i, j) on [d], each demanding w(i) > w(j). Stored as a dense
// bit grid. Arcs only grow until restart() clears them and opens a new
// segment.
class ArcSet {
 public:
  explicit ArcSet(std::size_t d);
  ArcSet(std::size_t d, std::span<const Arc> arcs);

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int i, int j) const;
  std::size_t segment() const { return segment_; }

  // Inserts the pairs; returns the ones not already present, in input order
  // with duplicates removed. Throws SelfLoop / DimensionMismatch.
  std::vector<Arc> add_arcs(std::span<const Arc> pairs);

  // Lexicographically sorted arc list.
  std::vector<Arc> arcs() const;

  // Directed cycle in ([d], arcs)? Kahn peeling.
  bool has_cycle() const;

  // Kahn's algorithm with smallest-index-first among sources. Throws
  // CyclicArcs.
  std::vector<int> topological_order() const;

  // Clears all arcs and advances the segment counter.
  void restart();

  // Bitmask of i with arc (i, v); requires d <= 64.
  std::uint64_t predecessors_mask(int v) const;

  friend bool operator==(const ArcSet& a, const ArcSet& b) {
    return a.d_ == b.d_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t words() const { return (d_ + 63) / 64; }

  std::size_t d_;
  std::vector<std::uint64_t> rows_;  // row i, bit j <=> arc (i, j)
  std::size_t count_ = 0;
  std::size_t segment_ = 0;
};

// w(order[k]) = (d - k) / (d + 1) for the deterministic topological order:
// distinct values in (0, 1) with w(i) > w(j) on every arc.
Objective topological_weights(const ArcSet& arcs);

}  // namespace mcvx
