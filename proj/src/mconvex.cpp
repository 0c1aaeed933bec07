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

#include "mcvx/mconvex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcvx/error.hpp"

namespace mcvx {
namespace {

bool all_binary(const Point& p) {
  return std::all_of(p.coords().begin(), p.coords().end(),
                     [](int v) { return v == 0 || v == 1; });
}

// Union-find with rollback; no path compression so unions can be undone.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Returns false if a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

// Lexicographic 0/1 generation with a caller-supplied pruning rule. `allow`
// decides whether coordinate `pos` may take `value` given the prefix.
template <typename Allow, typename Push, typename Pop, typename Done>
bool binary_dfs(std::size_t pos, Point& current, Allow& allow, Push& push,
                Pop& pop, Done& done, const PointVisitor& visit) {
  if (pos == current.dimension()) {
    if (!done()) return true;
    return visit(current);
  }
  for (int value = 0; value <= 1; ++value) {
    if (!allow(pos, value)) continue;
    current[pos] = value;
    push(pos, value);
    const bool keep_going =
        binary_dfs(pos + 1, current, allow, push, pop, done, visit);
    pop(pos, value);
    current[pos] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniformMatroid

UniformMatroid::UniformMatroid(std::size_t d_, std::size_t m_) : d(d_), m(m_) {
  if (d == 0) throw InvalidSet("uniform matroid: dimension must be positive");
  if (m > d) throw InvalidSet("uniform matroid: rank exceeds dimension");
}

bool UniformMatroid::contains(const Point& p) const {
  return all_binary(p) && p.sum() == static_cast<long long>(m);
}

void UniformMatroid::for_each(const PointVisitor& visit) const {
  Point current = Point::zeros(d);
  std::size_t ones = 0;
  auto allow = [&](std::size_t pos, int value) {
    const std::size_t remaining_after = d - pos - 1;
    const std::size_t ones_after = ones + value;
    return ones_after <= m && ones_after + remaining_after >= m;
  };
  auto push = [&](std::size_t, int value) { ones += value; };
  auto pop = [&](std::size_t, int value) { ones -= value; };
  auto done = [&] { return ones == m; };
  binary_dfs(0, current, allow, push, pop, done, visit);
}

double UniformMatroid::l1_radius() const {
  return static_cast<double>(std::min(m, d - m));
}

// ---------------------------------------------------------------------------
// GraphicMatroid

GraphicMatroid::GraphicMatroid(std::size_t vertices_,
                               std::vector<std::pair<int, int>> edges_)
    : vertices(vertices_), edges(std::move(edges_)) {
  if (vertices == 0) throw InvalidSet("graphic matroid: no vertices");
  if (edges.empty()) throw InvalidSet("graphic matroid: no edges");
  RollbackUnionFind uf(vertices);
  std::size_t components = vertices;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices ||
        static_cast<std::size_t>(v) >= vertices) {
      throw InvalidSet("graphic matroid: edge endpoint out of range");
    }
    if (uf.unite(u, v)) --components;
  }
  if (components != 1) throw InvalidSet("graphic matroid: graph is disconnected");
}

bool GraphicMatroid::contains(const Point& p) const {
  if (!all_binary(p) || p.sum() != static_cast<long long>(vertices) - 1) {
    return false;
  }
  RollbackUnionFind uf(vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (p[e] == 1 && !uf.unite(edges[e].first, edges[e].second)) return false;
  }
  return true;
}

void GraphicMatroid::for_each(const PointVisitor& visit) const {
  const std::size_t rank = vertices - 1;
  const std::size_t d = edges.size();
  Point current = Point::zeros(d);
  RollbackUnionFind uf(vertices);
  std::size_t chosen = 0;
  auto allow = [&](std::size_t pos, int value) {
    const std::size_t remaining_after = d - pos - 1;
    if (value == 0) return chosen + remaining_after >= rank;
    if (chosen + 1 > rank) return false;
    return uf.find(edges[pos].first) != uf.find(edges[pos].second);
  };
  auto push = [&](std::size_t pos, int value) {
    if (value == 1) {
      uf.unite(edges[pos].first, edges[pos].second);
      ++chosen;
    }
  };
  auto pop = [&](std::size_t, int value) {
    if (value == 1) {
      uf.undo();
      --chosen;
    }
  };
  auto done = [&] { return chosen == rank; };
  binary_dfs(0, current, allow, push, pop, done, visit);
}

double GraphicMatroid::l1_radius() const {
  const std::size_t rank = vertices - 1;
  return static_cast<double>(std::min(rank, edges.size() - rank));
}

// ---------------------------------------------------------------------------
// PartitionMatroid

PartitionMatroid::PartitionMatroid(std::vector<std::vector<int>> blocks_,
                                   std::vector<int> capacities_, int m_)
    : blocks(std::move(blocks_)), capacities(std::move(capacities_)), m(m_) {
  if (blocks.empty()) throw InvalidSet("partition matroid: no blocks");
  if (blocks.size() != capacities.size()) {
    throw InvalidSet("partition matroid: one capacity per block required");
  }
  std::size_t d = 0;
  for (const auto& block : blocks) d += block.size();
  if (d == 0) throw InvalidSet("partition matroid: dimension must be positive");
  block_of.assign(d, -1);
  int max_rank = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int element : blocks[b]) {
      if (element < 0 || static_cast<std::size_t>(element) >= d ||
          block_of[element] != -1) {
        throw InvalidSet("partition matroid: blocks must partition [d]");
      }
      block_of[element] = static_cast<int>(b);
    }
    if (capacities[b] < 0) throw InvalidSet("partition matroid: negative capacity");
    max_rank += std::min<int>(capacities[b], static_cast<int>(blocks[b].size()));
  }
  if (m < 0 || m > max_rank) {
    throw InvalidSet("partition matroid: rank m outside [0, sum of capacities]");
  }
}

bool PartitionMatroid::contains(const Point& p) const {
  if (!all_binary(p) || p.sum() != m) return false;
  std::vector<int> used(blocks.size(), 0);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] && ++used[block_of[i]] > capacities[block_of[i]]) return false;
  }
  return true;
}

void PartitionMatroid::for_each(const PointVisitor& visit) const {
  const std::size_t d = dimension();
  Point current = Point::zeros(d);
  std::vector<int> used(blocks.size(), 0);
  // remaining[b]: coordinates of block b at positions > current position.
  std::vector<int> remaining(blocks.size(), 0);
  for (int b : block_of) ++remaining[b];
  int total = 0;
  auto reachable_after = [&] {
    int extra = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      extra += std::min(capacities[b] - used[b], remaining[b]);
    }
    return extra;
  };
  auto allow = [&](std::size_t pos, int value) {
    const int b = block_of[pos];
    if (value == 1 && (used[b] + 1 > capacities[b] || total + 1 > m)) {
      return false;
    }
    --remaining[b];
    used[b] += value;
    const bool ok = total + value + reachable_after() >= m;
    used[b] -= value;
    ++remaining[b];
    return ok;
  };
  auto push = [&](std::size_t pos, int value) {
    const int b = block_of[pos];
    --remaining[b];
    used[b] += value;
    total += value;
  };
  auto pop = [&](std::size_t pos, int value) {
    const int b = block_of[pos];
    ++remaining[b];
    used[b] -= value;
    total -= value;
  };
  auto done = [&] { return total == m; };
  binary_dfs(0, current, allow, push, pop, done, visit);
}

double PartitionMatroid::l1_radius() const {
  return static_cast<double>(
      std::min<std::size_t>(m, dimension() - static_cast<std::size_t>(m)));
}

// ---------------------------------------------------------------------------
// LatticeSimplex

LatticeSimplex::LatticeSimplex(std::size_t d_, int D_, int m_)
    : d(d_), D(D_), m(m_) {
  if (d == 0) throw InvalidSet("lattice simplex: dimension must be positive");
  if (D <= 0) throw InvalidSet("lattice simplex: unit bound D must be positive");
  if (m < 0 || static_cast<long long>(m) > static_cast<long long>(d) * D) {
    throw InvalidSet("lattice simplex: total m outside [0, d*D]");
  }
}

bool LatticeSimplex::contains(const Point& p) const {
  for (int v : p.coords()) {
    if (v < 0 || v > D) return false;
  }
  return p.sum() == m;
}

namespace {

bool lattice_dfs(const LatticeSimplex& set, std::size_t pos, int remaining,
                 Point& current, const PointVisitor& visit) {
  if (pos == set.d) return remaining == 0 ? visit(current) : true;
  const long long capacity_after =
      static_cast<long long>(set.d - pos - 1) * set.D;
  for (int v = 0; v <= std::min(set.D, remaining); ++v) {
    if (remaining - v > capacity_after) continue;
    current[pos] = v;
    if (!lattice_dfs(set, pos + 1, remaining - v, current, visit)) return false;
  }
  current[pos] = 0;
  return true;
}

}  // namespace

void LatticeSimplex::for_each(const PointVisitor& visit) const {
  Point current = Point::zeros(d);
  lattice_dfs(*this, 0, m, current, visit);
}

double LatticeSimplex::l1_radius() const {
  return static_cast<double>(std::min<long long>(
      m, static_cast<long long>(d) * D - m));
}

// ---------------------------------------------------------------------------
// SegmentEmbed

SegmentEmbed::SegmentEmbed(std::size_t d_, int k_, std::size_t axis_)
    : d(d_), k(k_), axis(axis_) {
  if (d == 0) throw InvalidSet("segment embed: dimension must be positive");
  if (k <= 0) throw InvalidSet("segment embed: half-length k must be positive");
  if (axis >= d) throw InvalidSet("segment embed: axis out of range");
}

bool SegmentEmbed::contains(const Point& p) const {
  for (std::size_t i = 0; i < d; ++i) {
    if (i != axis && p[i] != 0) return false;
  }
  const int s = p[axis];
  return s >= -k && s <= k && p[d] == -s;
}

void SegmentEmbed::for_each(const PointVisitor& visit) const {
  // Earlier coordinates are all zero, so lexicographic order is ascending s.
  for (int s = -k; s <= k; ++s) {
    Point p = Point::zeros(d + 1);
    p[axis] = s;
    p[d] = -s;
    if (!visit(p)) return;
  }
}

double SegmentEmbed::l1_radius() const { return 2.0 * k; }

// ---------------------------------------------------------------------------
// ExplicitSet

ExplicitSet::ExplicitSet(std::size_t d_, std::vector<Point> points_)
    : d(d_), points(std::move(points_)) {
  if (d == 0) throw InvalidSet("explicit set: dimension must be positive");
  if (points.empty()) throw InvalidSet("explicit set: empty point list");
  for (const Point& p : points) {
    if (p.dimension() != d) throw InvalidSet("explicit set: point of wrong length");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!has_exchange_property(points)) {
    throw InvalidSet("explicit set: points violate the M-convex exchange axiom");
  }
}

bool ExplicitSet::contains(const Point& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

void ExplicitSet::for_each(const PointVisitor& visit) const {
  for (const Point& p : points) {
    if (!visit(p)) return;
  }
}

double ExplicitSet::l1_radius() const {
  long long best = 0;
  for (const Point& x : points) {
    for (const Point& y : points) {
      long long l1 = 0;
      for (std::size_t i = 0; i < d; ++i) l1 += std::abs(x[i] - y[i]);
      best = std::max(best, l1);
    }
  }
  return static_cast<double>(best) / 2.0;
}

// ---------------------------------------------------------------------------

std::string family_name(const Family& family) {
  struct Namer {
    std::string operator()(const UniformMatroid&) const { return "uniform_matroid"; }
    std::string operator()(const GraphicMatroid&) const { return "graphic_matroid"; }
    std::string operator()(const PartitionMatroid&) const {
      return "partition_matroid";
    }
    std::string operator()(const LatticeSimplex&) const { return "lattice_simplex"; }
    std::string operator()(const SegmentEmbed&) const { return "segment_embed"; }
    std::string operator()(const ExplicitSet&) const { return "explicit"; }
  };
  return std::visit(Namer{}, family);
}

MConvexSet::MConvexSet(Family family, std::size_t enumeration_limit)
    : family_(std::make_shared<const Family>(std::move(family))),
      limit_(enumeration_limit) {
  dimension_ = std::visit([](const auto& f) { return f.dimension(); }, *family_);
}

MConvexSet MConvexSet::uniform_matroid(std::size_t d, std::size_t m) {
  return MConvexSet(UniformMatroid(d, m));
}

MConvexSet MConvexSet::graphic_matroid(std::size_t vertices,
                                       std::vector<std::pair<int, int>> edges) {
  return MConvexSet(GraphicMatroid(vertices, std::move(edges)));
}

MConvexSet MConvexSet::partition_matroid(std::vector<std::vector<int>> blocks,
                                         std::vector<int> capacities, int m) {
  return MConvexSet(PartitionMatroid(std::move(blocks), std::move(capacities), m));
}

MConvexSet MConvexSet::lattice_simplex(std::size_t d, int D, int m) {
  return MConvexSet(LatticeSimplex(d, D, m));
}

MConvexSet MConvexSet::segment_embed(std::size_t d, int k, std::size_t axis) {
  return MConvexSet(SegmentEmbed(d, k, axis));
}

MConvexSet MConvexSet::explicit_points(std::size_t d, std::vector<Point> points) {
  return MConvexSet(ExplicitSet(d, std::move(points)));
}

MConvexSet MConvexSet::with_enumeration_limit(std::size_t limit) const {
  MConvexSet copy = *this;
  copy.limit_ = limit;
  return copy;
}

bool MConvexSet::contains(const Point& p) const {
  if (p.dimension() != dimension_) {
    std::ostringstream msg;
    msg << "point of length " << p.dimension() << " for set of dimension "
        << dimension_;
    throw DimensionMismatch(msg.str());
  }
  return std::visit([&](const auto& f) { return f.contains(p); }, *family_);
}

std::vector<Arc> MConvexSet::exchange_neighbors(const Point& x) const {
  if (!contains(x)) throw NotInSet("exchange_neighbors: " + to_string(x));
  std::vector<Arc> pairs;
  const int d = static_cast<int>(dimension_);
  Point y = x;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      --y[i];
      ++y[j];
      if (std::visit([&](const auto& f) { return f.contains(y); }, *family_)) {
        pairs.emplace_back(i, j);
      }
      ++y[i];
      --y[j];
    }
  }
  return pairs;
}

void MConvexSet::for_each(const PointVisitor& visit) const {
  std::visit([&](const auto& f) { f.for_each(visit); }, *family_);
}

std::vector<Point> MConvexSet::enumerate() const {
  std::vector<Point> points;
  bool refused = false;
  for_each([&](const Point& p) {
    if (points.size() == limit_) {
      refused = true;
      return false;
    }
    points.push_back(p);
    return true;
  });
  if (refused) {
    std::ostringstream msg;
    msg << family_name(*family_) << " has more than " << limit_
        << " points; refusing to enumerate";
    throw EnumerationRefused(msg.str());
  }
  return points;
}

Point MConvexSet::first_point() const {
  Point first;
  for_each([&](const Point& p) {
    first = p;
    return false;
  });
  if (first.dimension() != dimension_) throw InvalidSet("set has no points");
  return first;
}

double MConvexSet::l1_radius() const {
  return std::visit([](const auto& f) { return f.l1_radius(); }, *family_);
}

bool has_exchange_property(const std::vector<Point>& points) {
  auto member = [&](const Point& p) {
    return std::binary_search(points.begin(), points.end(), p);
  };
  for (const Point& x : points) {
    const std::size_t d = x.dimension();
    for (const Point& y : points) {
      for (std::size_t i = 0; i < d; ++i) {
        if (x[i] <= y[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < d && !found; ++j) {
          if (x[j] >= y[j]) continue;
          found = member(x.exchanged(static_cast<int>(i), static_cast<int>(j))) &&
                  member(y.exchanged(static_cast<int>(j), static_cast<int>(i)));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool verify_m_convexity(const MConvexSet& set) {
  return has_exchange_property(set.enumerate());
}

}  // namespace mcvx
