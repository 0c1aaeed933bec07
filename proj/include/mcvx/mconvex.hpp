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
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcvx/point.hpp"

namespace mcvx {

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

// Visitor callback for lexicographic point generation; return false to stop.
using PointVisitor = std::function<bool(const Point&)>;

// Characteristic vectors of the m-subsets of [d].
struct UniformMatroid {
  std::size_t d = 0;
  std::size_t m = 0;

  UniformMatroid(std::size_t d, std::size_t m);
  std::size_t dimension() const { return d; }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;
};

// Spanning-tree edge indicators of a connected multigraph. One coordinate per
// edge; self-loops are allowed and never appear in a tree.
struct GraphicMatroid {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;

  GraphicMatroid(std::size_t vertices, std::vector<std::pair<int, int>> edges);
  std::size_t dimension() const { return edges.size(); }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;
};

// Truncated partition matroid: 0/1 vectors with exactly m ones and at most
// capacities[b] ones inside blocks[b]. Blocks partition [d]; a block of
// capacity zero holds loops.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
  int m = 0;

  PartitionMatroid(std::vector<std::vector<int>> blocks,
                   std::vector<int> capacities, int m);
  std::size_t dimension() const { return block_of.size(); }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;

  std::vector<int> block_of;
};

// {x in {0..D}^d : sum x = m}.
struct LatticeSimplex {
  std::size_t d = 0;
  int D = 0;
  int m = 0;

  LatticeSimplex(std::size_t d, int D, int m);
  std::size_t dimension() const { return d; }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;
};

// Integer points of the axis-aligned segment -k <= x(axis) <= k in Z^d, lifted
// to an M-convex set of Z^{d+1} by a balancing last coordinate -x(axis).
struct SegmentEmbed {
  std::size_t d = 0;
  int k = 0;
  std::size_t axis = 0;

  SegmentEmbed(std::size_t d, int k, std::size_t axis);
  std::size_t dimension() const { return d + 1; }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;
};

// User-supplied point list, sorted and validated for M-convexity.
struct ExplicitSet {
  std::size_t d = 0;
  std::vector<Point> points;

  ExplicitSet(std::size_t d, std::vector<Point> points);
  std::size_t dimension() const { return d; }
  bool contains(const Point& p) const;
  void for_each(const PointVisitor& visit) const;
  double l1_radius() const;
};

using Family = std::variant<UniformMatroid, GraphicMatroid, PartitionMatroid,
                            LatticeSimplex, SegmentEmbed, ExplicitSet>;

std::string family_name(const Family& family);

// Immutable handle to a finite M-convex set. Copies share the family data.
class MConvexSet {
 public:
  explicit MConvexSet(Family family,
                      std::size_t enumeration_limit = kDefaultEnumerationLimit);

  static MConvexSet uniform_matroid(std::size_t d, std::size_t m);
  static MConvexSet graphic_matroid(std::size_t vertices,
                                    std::vector<std::pair<int, int>> edges);
  static MConvexSet partition_matroid(std::vector<std::vector<int>> blocks,
                                      std::vector<int> capacities, int m);
  static MConvexSet lattice_simplex(std::size_t d, int D, int m);
  static MConvexSet segment_embed(std::size_t d, int k, std::size_t axis);
  static MConvexSet explicit_points(std::size_t d, std::vector<Point> points);

  const Family& family() const { return *family_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t enumeration_limit() const { return limit_; }
  MConvexSet with_enumeration_limit(std::size_t limit) const;

  // Throws DimensionMismatch on wrong length.
  bool contains(const Point& p) const;

  // All (i, j), i != j, with x - e_i + e_j in the set, lexicographic.
  // Throws NotInSet if x is not a member.
  std::vector<Arc> exchange_neighbors(const Point& x) const;

  // Lexicographic; throws EnumerationRefused past the limit.
  std::vector<Point> enumerate() const;

  // Lexicographically smallest member (== enumerate().front()).
  Point first_point() const;

  // Upper bound on max ||x - y||_1 / 2 over members x, y.
  double l1_radius() const;

  // Visits members in lexicographic order without the size guard.
  void for_each(const PointVisitor& visit) const;

 private:
  std::shared_ptr<const Family> family_;
  std::size_t dimension_ = 0;
  std::size_t limit_ = kDefaultEnumerationLimit;
};

// Brute-force exchange-property check over a sorted point list.
bool has_exchange_property(const std::vector<Point>& sorted_points);

// True iff the set satisfies the M-convex exchange axiom. Enumerates.
bool verify_m_convexity(const MConvexSet& set);

}  // namespace mcvx
