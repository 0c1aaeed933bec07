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

#include "mcvx/orderstate.hpp"

#include <functional>
#include <queue>

#include "mcvx/error.hpp"

namespace mcvx {

ArcSet::ArcSet(std::size_t d) : d_(d), rows_(d * ((d + 63) / 64), 0) {}

ArcSet::ArcSet(std::size_t d, std::span<const Arc> arcs) : ArcSet(d) {
  add_arcs(arcs);
}

bool ArcSet::contains(int i, int j) const {
  return (rows_[i * words() + j / 64] >> (j % 64)) & 1U;
}

std::vector<Arc> ArcSet::add_arcs(std::span<const Arc> pairs) {
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= d_ ||
        static_cast<std::size_t>(j) >= d_) {
      throw DimensionMismatch("arc endpoint outside [d]");
    }
    if (i == j) throw SelfLoop("arc (i, i) is not allowed");
  }
  std::vector<Arc> added;
  for (const auto& [i, j] : pairs) {
    if (contains(i, j)) continue;
    rows_[i * words() + j / 64] |= std::uint64_t{1} << (j % 64);
    ++count_;
    added.emplace_back(i, j);
  }
  return added;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      if (contains(static_cast<int>(i), static_cast<int>(j))) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

namespace {

// Smallest-index-first Kahn order; returns fewer than d vertices on a cycle.
std::vector<int> kahn(const ArcSet& set) {
  const std::size_t d = set.dimension();
  std::vector<int> indegree(d, 0);
  const auto arcs = set.arcs();
  std::vector<std::vector<int>> out(d);
  for (const auto& [i, j] : arcs) {
    ++indegree[j];
    out[i].push_back(j);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < d; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<int>(v));
  }
  std::vector<int> order;
  order.reserve(d);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int u : out[v]) {
      if (--indegree[u] == 0) ready.push(u);
    }
  }
  return order;
}

}  // namespace

bool ArcSet::has_cycle() const { return kahn(*this).size() != d_; }

std::vector<int> ArcSet::topological_order() const {
  auto order = kahn(*this);
  if (order.size() != d_) throw CyclicArcs("arc set contains a directed cycle");
  return order;
}

void ArcSet::restart() {
  std::fill(rows_.begin(), rows_.end(), 0);
  count_ = 0;
  ++segment_;
}

std::uint64_t ArcSet::predecessors_mask(int v) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    if (contains(static_cast<int>(i), v)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Objective topological_weights(const ArcSet& arcs) {
  const std::size_t d = arcs.dimension();
  const auto order = arcs.topological_order();
  std::vector<double> w(d);
  for (std::size_t k = 0; k < d; ++k) {
    w[order[k]] = static_cast<double>(d - k) / static_cast<double>(d + 1);
  }
  return Objective(std::move(w));
}

}  // namespace mcvx
