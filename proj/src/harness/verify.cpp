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

#include "mcvx/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mcvx/error.hpp"
#include "mcvx/geometry.hpp"
#include "mcvx/harness/descriptor.hpp"
#include "mcvx/harness/trace.hpp"
#include "mcvx/learner.hpp"

namespace mcvx::harness {

using nlohmann::json;

std::size_t VerifyReport::count(std::string_view kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.kind == kind; }));
}

json VerifyReport::to_json() const {
  json list = json::array();
  for (const auto& v : violations) {
    list.push_back({{"round", v.round}, {"kind", v.kind}, {"message", v.message}});
  }
  return {{"rounds", rounds}, {"violations", list}, {"ok", ok()}};
}

namespace {

using ArcList = std::set<Arc>;

bool cyclic(std::size_t d, const ArcList& arcs) {
  // Three-colour depth-first search.
  std::vector<std::vector<int>> out(d);
  for (const auto& [i, j] : arcs) out[i].push_back(j);
  std::vector<int> colour(d, 0);
  auto visit = [&](auto&& self, int v) -> bool {
    colour[v] = 1;
    for (int u : out[v]) {
      if (colour[u] == 1) return true;
      if (colour[u] == 0 && self(self, u)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < d; ++v) {
    if (colour[v] == 0 && visit(visit, static_cast<int>(v))) return true;
  }
  return false;
}

// Permutations of [d] (largest first) respecting every arc.
std::uint64_t count_orders(std::size_t d, const ArcList& arcs) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> position(d);
  std::uint64_t count = 0;
  do {
    for (std::size_t k = 0; k < d; ++k) position[perm[k]] = static_cast<int>(k);
    bool ok = true;
    for (const auto& [i, j] : arcs) {
      if (position[i] > position[j]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

long double inner(const std::vector<double>& w, const std::vector<int>& x) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long double>(w[i]) * x[i];
  return s;
}

std::string fmt(const std::vector<int>& v) { return to_string(Point(v)); }

}  // namespace

VerifyReport verify_trace(const std::vector<json>& trace) {
  VerifyReport report;
  auto flag = [&](std::size_t t, std::string kind, std::string message) {
    report.violations.push_back({t, std::move(kind), std::move(message)});
  };
  if (trace.empty() || trace.front().value("type", "") != "header") {
    throw TraceError("trace has no header");
  }
  const json& header = trace.front();
  const auto w_star = header.at("w_star").get<std::vector<double>>();
  const std::size_t d = w_star.size();
  const json& cfg = header.at("config");
  const LearnerVariant variant =
      parse_variant(cfg.at("learner").at("variant").get<std::string>());
  const bool centroid = uses_centroid(variant);
  const bool restarting = restarts_on_cycle(variant);

  std::map<ArcList, std::uint64_t> order_counts;
  auto orders = [&](const ArcList& arcs) {
    auto it = order_counts.find(arcs);
    if (it == order_counts.end()) {
      it = order_counts.emplace(arcs, count_orders(d, arcs)).first;
    }
    return it->second;
  };
  const std::uint64_t d_factorial = factorial(d);

  ArcList state;
  std::size_t segment = 0;
  long double regret = 0.0L;
  std::size_t mistakes = 0;
  std::size_t restarts = 0;
  std::size_t suboptimal = 0;
  const json* summary = nullptr;

  for (std::size_t line = 1; line < trace.size(); ++line) {
    const json& rec = trace[line];
    const std::string type = rec.value("type", "");
    if (type == "summary") {
      summary = &rec;
      continue;
    }
    if (type == "error") {
      flag(rec.value("t", std::size_t{0}), "protocol", rec.value("message", ""));
      continue;
    }
    if (type != "round") throw TraceError("unknown record type '" + type + "'");
    ++report.rounds;
    const std::size_t t = rec.at("t").get<std::size_t>();
    if (t != report.rounds) flag(t, "sequence", "round index out of order");

    const MConvexSet set = set_from_json(rec.at("set"));
    const auto x = rec.at("x").get<std::vector<int>>();
    const auto x_hat = rec.at("x_hat").get<std::vector<int>>();
    const auto w_hat = rec.at("w_hat").get<std::vector<double>>();
    if (set.dimension() != d || x.size() != d || x_hat.size() != d ||
        w_hat.size() != d) {
      flag(t, "dimension", "record dimensions disagree with the header");
      continue;
    }
    std::vector<std::vector<int>> points;
    try {
      for (const Point& p : set.enumerate()) points.push_back(p.coords());
    } catch (const EnumerationRefused& e) {
      flag(t, "unverifiable", e.what());
      continue;
    }
    const std::set<std::vector<int>> members(points.begin(), points.end());
    if (!members.contains(x)) flag(t, "membership", "x_t " + fmt(x) + " not in X_t");
    if (!members.contains(x_hat)) {
      flag(t, "membership", "x_hat_t " + fmt(x_hat) + " not in X_t");
    }

    // Agent optimality under w*.
    long double best = -INFINITY;
    for (const auto& p : points) best = std::max(best, inner(w_star, p));
    const bool optimal = inner(w_star, x) == best;
    if (!optimal) {
      ++suboptimal;
      flag(t, "optimality", "x_t " + fmt(x) + " is not optimal for w*");
    }
    if (rec.at("corrupted").get<bool>() == optimal) {
      flag(t, "corruption_flag", "corrupted flag disagrees with the oracle");
    }

    // Recorded arc state A_t.
    const auto recorded = arcs_from_json(rec.at("arcs"));
    const ArcList recorded_set(recorded.begin(), recorded.end());
    if (recorded_set != state) flag(t, "arcs", "A_t differs from the replayed arc set");
    if (rec.at("segment").get<std::size_t>() != segment) {
      flag(t, "arcs", "segment counter differs from replayed restarts");
    }

    // Estimate: distinct and strictly consistent with A_t.
    {
      std::vector<double> sorted = w_hat;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        flag(t, "estimate", "w_hat_t has tied components");
      }
      for (const auto& [i, j] : state) {
        if (!(w_hat[i] > w_hat[j])) {
          std::ostringstream msg;
          msg << "w_hat_t violates arc (" << i << "," << j << ")";
          flag(t, "estimate", msg.str());
        }
      }
    }

    // Suggestion: unique brute-force maximizer of w_hat_t.
    {
      long double top = -INFINITY;
      std::vector<const std::vector<int>*> arg;
      for (const auto& p : points) {
        const long double v = inner(w_hat, p);
        if (v > top) {
          top = v;
          arg.assign(1, &p);
        } else if (v == top) {
          arg.push_back(&p);
        }
      }
      if (arg.size() != 1 || *arg.front() != x_hat) {
        flag(t, "suggestion", "x_hat_t is not the unique maximizer of w_hat_t");
      }
    }

    // Gap and regret arithmetic.
    const long double gap = inner(w_star, x) - inner(w_star, x_hat);
    const double recorded_gap = rec.at("gap").get<double>();
    if (std::fabs(static_cast<long double>(recorded_gap) - gap) >
        1e-12L * std::max(1.0L, std::fabs(gap))) {
      std::ostringstream msg;
      msg << "gap " << recorded_gap << " but <w*, x_t - x_hat_t> = "
          << static_cast<double>(gap);
      flag(t, "gap", msg.str());
    }
    regret += gap;
    const double cum = rec.at("cum_regret").get<double>();
    if (std::fabs(static_cast<long double>(cum) - regret) >
        1e-9L * std::max(1.0L, std::fabs(regret))) {
      flag(t, "cumulative", "cum_regret differs from the running sum of gaps");
    }
    const bool mistake = x != x_hat;
    if (rec.at("mistake").get<bool>() != mistake) {
      flag(t, "mistake", "mistake flag differs from x_t != x_hat_t");
    }
    if (mistake) ++mistakes;

    // New arcs: exchange neighbors of x_t not already in A_t.
    ArcList neighbors;
    if (members.contains(x)) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          std::vector<int> y = x;
          --y[i];
          ++y[j];
          if (members.contains(y)) {
            neighbors.emplace(static_cast<int>(i), static_cast<int>(j));
          }
        }
      }
    }
    ArcList expected_new;
    for (const Arc& a : neighbors) {
      if (!state.contains(a)) expected_new.insert(a);
    }
    const auto new_arcs = arcs_from_json(rec.at("new_arcs"));
    if (ArcList(new_arcs.begin(), new_arcs.end()) != expected_new ||
        rec.at("new_arc_count").get<std::size_t>() != expected_new.size()) {
      flag(t, "arcs", "new arcs differ from the exchange neighbors of x_t");
    }
    ArcList next = state;
    next.insert(expected_new.begin(), expected_new.end());
    const bool has_cycle = cyclic(d, next);
    const bool restarted = rec.at("restarted").get<bool>();
    if (rec.at("cycle").get<bool>() != has_cycle) {
      flag(t, "cycle", "cycle flag differs from depth-first search");
    }
    if (restarted != (restarting && has_cycle)) {
      flag(t, "restart", "restart flag inconsistent with the cycle rule");
    }

    // Volumes and the shrink inequality.
    if (rec.contains("volume") && d <= 10) {
      const Volume v = Volume::parse(rec.at("volume").get<std::string>());
      const Volume expected{orders(state), d_factorial};
      if (!(v == expected)) {
        flag(t, "volume", "Vol(P_t) " + v.to_string() + " but brute force gives " +
                              expected.to_string());
      }
      if (rec.contains("volume_next")) {
        const Volume vn = Volume::parse(rec.at("volume_next").get<std::string>());
        const Volume expected_next{has_cycle ? 0 : orders(next), d_factorial};
        if (!(vn == expected_next)) {
          flag(t, "volume", "Vol(P_t+1) " + vn.to_string() +
                                " but brute force gives " + expected_next.to_string());
        }
        if (centroid && mistake && expected.extensions > 0) {
          const long double ratio =
              static_cast<long double>(expected_next.extensions) /
              static_cast<long double>(expected.extensions);
          const long double limit = 1.0L - 1.0L / std::exp(1.0L) + 1e-12L;
          if (ratio > limit) {
            std::ostringstream msg;
            msg << "mistake round shrinks volume by " << static_cast<double>(ratio);
            flag(t, "shrink", msg.str());
          }
        }
      }
    }

    if (restarted) {
      state.clear();
      ++segment;
      ++restarts;
    } else {
      state = std::move(next);
    }
  }

  if (summary == nullptr) {
    flag(0, "summary", "trace has no summary footer");
  } else {
    const json& s = *summary;
    if (std::fabs(static_cast<long double>(s.at("R_T").get<double>()) - regret) >
        1e-9L * std::max(1.0L, std::fabs(regret))) {
      flag(0, "summary", "R_T differs from the sum of gaps");
    }
    if (s.at("mistakes").get<std::size_t>() != mistakes) {
      flag(0, "summary", "mistake count differs");
    }
    if (s.at("restarts").get<std::size_t>() != restarts) {
      flag(0, "summary", "restart count differs");
    }
    if (s.at("realized_C").get<std::size_t>() != suboptimal) {
      flag(0, "summary", "realized_C differs from the number of suboptimal rounds");
    }
  }
  return report;
}

VerifyReport verify_trace_file(const std::string& path) {
  return verify_trace(read_trace_file(path));
}

}  // namespace mcvx::harness
