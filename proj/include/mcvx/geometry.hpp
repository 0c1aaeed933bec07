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
#include <string>
#include <string_view>
#include <vector>

#include "mcvx/linopt.hpp"
#include "mcvx/orderstate.hpp"

namespace mcvx {

// Hard ceiling for exact geometry: rank sums d * d! must fit in 64 bits.
inline constexpr std::size_t kMaxExactDimension = 19;

struct GeometryOptions {
  // Exact linear-extension based geometry is used up to this dimension.
  std::size_t exact_max_dim = 9;
  // Hit-and-run: steps discarded before the first sample (0 = 1000 + 100 d^2)
  // and steps between recorded samples (0 = d).
  std::size_t burn_in = 0;
  std::size_t thinning = 0;
};

// Exact volume L / d! of an order polytope, L = number of linear extensions.
struct Volume {
  std::uint64_t extensions = 0;
  std::uint64_t factorial = 1;

  long double value() const {
    return static_cast<long double>(extensions) /
           static_cast<long double>(factorial);
  }
  // "L/d!" with both integers written out, e.g. "2/6". Not reduced.
  std::string to_string() const;
  static Volume parse(std::string_view text);

  // Rational equality (2/6 == 1/3).
  friend bool operator==(const Volume& a, const Volume& b) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<Wide>(a.extensions) * b.factorial ==
           static_cast<Wide>(b.extensions) * a.factorial;
  }
};

std::uint64_t factorial(std::size_t n);

// Vol(next) / Vol(prev) for volumes of the same dimension.
long double volume_ratio(const Volume& next, const Volume& prev);

// Ordering of [d] from the largest weight to the smallest.
using LinearExtension = std::vector<int>;

// P = { w in [0,1]^d : w(i) >= w(j) for all arcs (i, j) } of an acyclic arc
// set. The cube splits into d! congruent order simplices, so
// Vol(P) = L / d! and the centroid is the mean over linear extensions of the
// simplex centroids, whose k-th largest coordinate is (d + 1 - k) / (d + 1).
class OrderPolytope {
 public:
  // Throws CyclicArcs.
  explicit OrderPolytope(const ArcSet& arcs, GeometryOptions options = {});

  std::size_t dimension() const { return arcs_.dimension(); }
  const ArcSet& arcs() const { return arcs_; }
  const GeometryOptions& options() const { return options_; }
  bool exact_available() const { return exact_; }

  // Backtracking over source frontiers, lexicographic. Cost O(L d).
  std::vector<LinearExtension> enumerate_extensions() const;

  std::uint64_t extension_count() const;
  Volume volume() const;

  // Extensions that place i above j (0 when (j, i) is forced).
  std::uint64_t extensions_with(int i, int j) const;

  // rank_sums()[i] = sum over extensions of (d + 1 - rank_i); the centroid
  // coordinate is rank_sums()[i] / (L (d + 1)).
  std::vector<std::uint64_t> rank_sums() const;
  Objective centroid() const;

  // Exact centroid with tied coordinates separated by multiples of a tiny
  // epsilon in deterministic topological order. Distinct components, every
  // arc strict, still inside P.
  Objective tie_broken_centroid() const;

  // Uniform samples. Exact mode draws a uniform extension and sorts d uniform
  // variates along it; otherwise hit-and-run (approximate). n == 0 is empty.
  std::vector<std::vector<double>> sample_uniform(std::uint64_t seed,
                                                  std::size_t n) const;

  // Mean of hit-and-run samples, mixed with a strictly interior point and
  // tie-broken so it can stand in for the exact estimate at large d.
  Objective approximate_tie_broken_centroid(std::uint64_t seed,
                                            std::size_t n) const;

  bool contains(std::span<const double> w, bool strict = false) const;

 private:
  void require_exact(const char* what) const;
  std::vector<std::vector<double>> sample_exact(std::uint64_t seed,
                                                std::size_t n) const;
  std::vector<std::vector<double>> sample_hit_and_run(std::uint64_t seed,
                                                      std::size_t n) const;

  ArcSet arcs_;
  GeometryOptions options_;
  bool exact_ = false;
  std::vector<std::uint64_t> above_;   // above_[v]: mask of i with arc (i, v)
  std::vector<std::uint64_t> prefix_;  // orderings of an up-closed prefix set
  std::vector<std::uint64_t> suffix_;  // completions of a prefix set
};

// Separates tied entries of `values`: within a tie group the member earlier in
// `order` gets the larger offset. Offsets are multiples of
// min(1e-9, gap / (4 d)), gap = smallest positive difference between values.
std::vector<double> break_ties(std::span<const long double> values,
                               std::span<const int> order);

}  // namespace mcvx
