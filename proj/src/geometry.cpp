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

#include "mcvx/geometry.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "mcvx/error.hpp"

namespace mcvx {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string Volume::to_string() const {
  return std::to_string(extensions) + "/" + std::to_string(factorial);
}

Volume Volume::parse(std::string_view text) {
  const auto slash = text.find('/');
  Volume v;
  if (slash == std::string_view::npos) throw TraceError("volume without '/'");
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  auto r1 = std::from_chars(num.data(), num.data() + num.size(), v.extensions);
  auto r2 = std::from_chars(den.data(), den.data() + den.size(), v.factorial);
  if (r1.ec != std::errc{} || r1.ptr != num.data() + num.size() ||
      r2.ec != std::errc{} || r2.ptr != den.data() + den.size() ||
      v.factorial == 0) {
    throw TraceError("malformed volume fraction: " + std::string(text));
  }
  return v;
}

long double volume_ratio(const Volume& next, const Volume& prev) {
  return static_cast<long double>(next.extensions) /
         static_cast<long double>(prev.extensions) *
         (static_cast<long double>(prev.factorial) /
          static_cast<long double>(next.factorial));
}

OrderPolytope::OrderPolytope(const ArcSet& arcs, GeometryOptions options)
    : arcs_(arcs), options_(options) {
  if (arcs_.has_cycle()) throw CyclicArcs("order polytope of a cyclic arc set");
  const std::size_t d = arcs_.dimension();
  exact_ = d <= std::min(options_.exact_max_dim, kMaxExactDimension);
  if (!exact_) return;

  above_.resize(d);
  for (std::size_t v = 0; v < d; ++v) {
    above_[v] = arcs_.predecessors_mask(static_cast<int>(v));
  }
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  prefix_.assign(full + 1, 0);
  suffix_.assign(full + 1, 0);
  prefix_[0] = 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (prefix_[s] == 0) continue;
    for (std::size_t v = 0; v < d; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(s & bit) && (above_[v] & ~s) == 0) prefix_[s | bit] += prefix_[s];
    }
  }
  suffix_[full] = 1;
  for (std::uint64_t s = full; s-- > 0;) {
    if (prefix_[s] == 0) continue;  // not an up-closed set
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < d; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(s & bit) && (above_[v] & ~s) == 0) total += suffix_[s | bit];
    }
    suffix_[s] = total;
  }
}

void OrderPolytope::require_exact(const char* what) const {
  if (!exact_) {
    std::ostringstream msg;
    msg << what << ": dimension " << dimension()
        << " exceeds the exact-geometry bound "
        << std::min(options_.exact_max_dim, kMaxExactDimension);
    throw ExactModeRefused(msg.str());
  }
}

std::vector<LinearExtension> OrderPolytope::enumerate_extensions() const {
  require_exact("enumerate_extensions");
  const std::size_t d = dimension();
  std::vector<LinearExtension> out;
  LinearExtension current;
  current.reserve(d);
  std::uint64_t placed = 0;
  auto recurse = [&](auto&& self) -> void {
    if (current.size() == d) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = 0; v < d; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((placed & bit) || (above_[v] & ~placed) != 0) continue;
      placed |= bit;
      current.push_back(static_cast<int>(v));
      self(self);
      current.pop_back();
      placed &= ~bit;
    }
  };
  recurse(recurse);
  return out;
}

std::uint64_t OrderPolytope::extension_count() const {
  require_exact("extension_count");
  return suffix_[0];
}

Volume OrderPolytope::volume() const {
  return Volume{extension_count(), factorial(dimension())};
}

std::uint64_t OrderPolytope::extensions_with(int i, int j) const {
  require_exact("extensions_with");
  ArcSet extended = arcs_;
  const Arc arc{i, j};
  extended.add_arcs(std::span<const Arc>(&arc, 1));
  if (extended.has_cycle()) return 0;
  return OrderPolytope(extended, options_).extension_count();
}

std::vector<std::uint64_t> OrderPolytope::rank_sums() const {
  require_exact("rank_sums");
  const std::size_t d = dimension();
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  std::vector<std::uint64_t> sums(d, 0);
  for (std::uint64_t s = 0; s < full; ++s) {
    if (prefix_[s] == 0) continue;
    // The next element placed after prefix s has rank |s| + 1.
    const std::uint64_t value = d - static_cast<std::size_t>(std::popcount(s));
    for (std::size_t v = 0; v < d; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((s & bit) || (above_[v] & ~s) != 0) continue;
      sums[v] += value * prefix_[s] * suffix_[s | bit];
    }
  }
  return sums;
}

Objective OrderPolytope::centroid() const {
  const auto sums = rank_sums();
  const long double denom =
      static_cast<long double>(extension_count()) * (dimension() + 1);
  std::vector<double> w(sums.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = static_cast<double>(static_cast<long double>(sums[i]) / denom);
  }
  return Objective(std::move(w));
}

std::vector<double> break_ties(std::span<const long double> values,
                               std::span<const int> order) {
  const std::size_t d = values.size();
  std::vector<long double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  long double gap = 0.0L;
  for (std::size_t k = 1; k < d; ++k) {
    const long double diff = sorted[k] - sorted[k - 1];
    if (diff > 0 && (gap == 0 || diff < gap)) gap = diff;
  }
  long double eps = 1e-9L;
  if (gap > 0) eps = std::min(eps, gap / (4.0L * static_cast<long double>(d)));

  std::vector<std::size_t> position(d);
  for (std::size_t k = 0; k < d; ++k) position[order[k]] = k;
  std::map<long double, std::vector<int>> groups;
  for (std::size_t i = 0; i < d; ++i) groups[values[i]].push_back(static_cast<int>(i));

  std::vector<double> out(d);
  for (auto& [value, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return position[a] < position[b]; });
    const std::size_t g = members.size();
    for (std::size_t r = 0; r < g; ++r) {
      out[members[r]] = static_cast<double>(
          value + eps * static_cast<long double>(g - 1 - r));
    }
  }
  return out;
}

Objective OrderPolytope::tie_broken_centroid() const {
  const auto sums = rank_sums();
  const long double denom =
      static_cast<long double>(extension_count()) * (dimension() + 1);
  std::vector<long double> values(sums.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<long double>(sums[i]) / denom;
  }
  const auto order = arcs_.topological_order();
  Objective w(break_ties(values, order));
  if (!w.distinct()) throw Error("tie-broken centroid is not distinct");
  return w;
}

bool OrderPolytope::contains(std::span<const double> w, bool strict) const {
  if (w.size() != dimension()) throw DimensionMismatch("order polytope point");
  for (double v : w) {
    if (v < 0.0 || v > 1.0) return false;
  }
  for (const auto& [i, j] : arcs_.arcs()) {
    if (strict ? !(w[i] > w[j]) : !(w[i] >= w[j])) return false;
  }
  return true;
}

std::vector<std::vector<double>> OrderPolytope::sample_uniform(
    std::uint64_t seed, std::size_t n) const {
  if (n == 0) return {};
  return exact_ ? sample_exact(seed, n) : sample_hit_and_run(seed, n);
}

std::vector<std::vector<double>> OrderPolytope::sample_exact(
    std::uint64_t seed, std::size_t n) const {
  const std::size_t d = dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> samples;
  samples.reserve(n);
  std::vector<double> variates(d);
  std::vector<int> extension(d);
  for (std::size_t s = 0; s < n; ++s) {
    // Uniform linear extension: choose the next element with probability
    // proportional to the number of completions it leaves.
    std::uint64_t placed = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::uniform_int_distribution<std::uint64_t> pick(0, suffix_[placed] - 1);
      std::uint64_t r = pick(rng);
      for (std::size_t v = 0; v < d; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if ((placed & bit) || (above_[v] & ~placed) != 0) continue;
        const std::uint64_t weight = suffix_[placed | bit];
        if (r < weight) {
          extension[k] = static_cast<int>(v);
          placed |= bit;
          break;
        }
        r -= weight;
      }
    }
    for (double& u : variates) u = unit(rng);
    std::sort(variates.begin(), variates.end(), std::greater<>());
    std::vector<double> w(d);
    for (std::size_t k = 0; k < d; ++k) w[extension[k]] = variates[k];
    samples.push_back(std::move(w));
  }
  return samples;
}

std::vector<std::vector<double>> OrderPolytope::sample_hit_and_run(
    std::uint64_t seed, std::size_t n) const {
  const std::size_t d = dimension();
  const std::size_t burn_in =
      options_.burn_in ? options_.burn_in : 1000 + 100 * d * d;
  const std::size_t thinning = options_.thinning ? options_.thinning : d;
  const auto arcs = arcs_.arcs();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> x = topological_weights(arcs_).weights();
  std::vector<double> u(d);
  auto step = [&] {
    double norm = 0.0;
    for (double& c : u) {
      c = normal(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    for (double& c : u) c /= norm;
    double lo = -INFINITY;
    double hi = INFINITY;
    for (std::size_t k = 0; k < d; ++k) {
      if (u[k] > 0) {
        hi = std::min(hi, (1.0 - x[k]) / u[k]);
        lo = std::max(lo, -x[k] / u[k]);
      } else if (u[k] < 0) {
        hi = std::min(hi, -x[k] / u[k]);
        lo = std::max(lo, (1.0 - x[k]) / u[k]);
      }
    }
    for (const auto& [i, j] : arcs) {
      const double slope = u[i] - u[j];
      const double slack = std::max(0.0, x[i] - x[j]);
      if (slope < 0) {
        hi = std::min(hi, slack / -slope);
      } else if (slope > 0) {
        lo = std::max(lo, -slack / slope);
      }
    }
    if (!(hi > lo)) return;
    const double lambda = lo + (hi - lo) * unit(rng);
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = std::clamp(x[k] + lambda * u[k], 0.0, 1.0);
    }
  };

  for (std::size_t s = 0; s < burn_in; ++s) step();
  std::vector<std::vector<double>> samples;
  samples.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < thinning; ++t) step();
    samples.push_back(x);
  }
  return samples;
}

Objective OrderPolytope::approximate_tie_broken_centroid(std::uint64_t seed,
                                                         std::size_t n) const {
  const std::size_t d = dimension();
  const auto samples = sample_hit_and_run(seed, std::max<std::size_t>(n, 1));
  const auto interior = topological_weights(arcs_).weights();
  constexpr long double kMix = 1e-6L;
  std::vector<long double> mean(d, 0.0L);
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < d; ++k) mean[k] += s[k];
  }
  for (std::size_t k = 0; k < d; ++k) {
    mean[k] = (1.0L - kMix) * mean[k] / static_cast<long double>(samples.size()) +
              kMix * interior[k];
  }
  const auto order = arcs_.topological_order();
  return Objective(break_ties(mean, order));
}

}  // namespace mcvx
