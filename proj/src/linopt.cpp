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

#include "mcvx/linopt.hpp"

#include <algorithm>
#include <cmath>

#include "mcvx/error.hpp"

namespace mcvx {

Objective::Objective(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double v : weights_) {
    if (!std::isfinite(v)) throw Error("objective has a non-finite component");
  }
  std::vector<double> sorted = weights_;
  std::sort(sorted.begin(), sorted.end());
  distinct_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Objective Objective::scaled(double factor) const {
  std::vector<double> w = weights_;
  for (double& v : w) v *= factor;
  return Objective(std::move(w));
}

namespace {

void check_dimension(const MConvexSet& set, const Objective& w) {
  if (w.dimension() != set.dimension()) {
    throw DimensionMismatch("objective length differs from set dimension");
  }
}

}  // namespace

Point argmax_exchange(const MConvexSet& set, const Objective& w) {
  check_dimension(set, w);
  Point x = set.first_point();
  for (;;) {
    // Moving to x - e_i + e_j gains w(j) - w(i); keep the largest gain, first
    // pair in lexicographic order on ties.
    double best_gain = 0.0;
    Arc best{-1, -1};
    for (const auto& [i, j] : set.exchange_neighbors(x)) {
      const double gain = w[j] - w[i];
      if (gain > best_gain) {
        best_gain = gain;
        best = {i, j};
      }
    }
    if (best.first < 0) return x;
    x = x.exchanged(best.first, best.second);
  }
}

std::vector<Point> argmax_bruteforce(const MConvexSet& set, const Objective& w) {
  check_dimension(set, w);
  std::vector<Point> best;
  long double best_value = 0.0L;
  for (const Point& x : set.enumerate()) {
    const long double value = w.value(x);
    if (best.empty() || value > best_value) {
      best.assign(1, x);
      best_value = value;
    } else if (value == best_value) {
      best.push_back(x);
    }
  }
  return best;
}

bool is_exchange_optimal(const MConvexSet& set, const Objective& w,
                         const Point& x) {
  check_dimension(set, w);
  const auto pairs = set.exchange_neighbors(x);
  return std::none_of(pairs.begin(), pairs.end(),
                      [&](const Arc& a) { return w[a.first] < w[a.second]; });
}

}  // namespace mcvx
