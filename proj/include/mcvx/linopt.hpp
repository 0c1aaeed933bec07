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

#include <span>
#include <vector>

#include "mcvx/mconvex.hpp"
#include "mcvx/point.hpp"

namespace mcvx {

// Linear objective w in R^d.
class Objective {
 public:
  Objective() = default;
  explicit Objective(std::vector<double> weights);

  std::size_t dimension() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  std::span<const double> span() const { return weights_; }

  // All components pairwise different (uniqueness of maximizers).
  bool distinct() const { return distinct_; }

  long double value(const Point& x) const { return dot(weights_, x); }
  Objective scaled(double factor) const;
  Objective negated() const { return scaled(-1.0); }

  friend bool operator==(const Objective& a, const Objective& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<double> weights_;
  bool distinct_ = true;
};

// Steepest-ascent exchange local search from the lexicographically smallest
// member. The stopping point satisfies w(i) >= w(j) for every exchange
// neighbor (i, j), hence maximizes <w, .> over an M-convex set.
Point argmax_exchange(const MConvexSet& set, const Objective& w);

// Every maximizer by exhaustive scan, lexicographic. Enumerates.
std::vector<Point> argmax_bruteforce(const MConvexSet& set, const Objective& w);

// No exchange neighbor (i, j) of x has w(i) < w(j). Throws NotInSet.
bool is_exchange_optimal(const MConvexSet& set, const Objective& w,
                         const Point& x);

}  // namespace mcvx
