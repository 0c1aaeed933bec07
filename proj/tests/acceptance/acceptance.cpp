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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Seeds are fixed constants chosen before any run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "mcvx/geometry.hpp"
#include "mcvx/harness/config.hpp"
#include "mcvx/harness/experiment.hpp"
#include "mcvx/harness/sweep.hpp"
#include "mcvx/learner.hpp"
#include "mcvx/linopt.hpp"

#ifndef MCVX_CONFIG_DIR
#define MCVX_CONFIG_DIR "configs"
#endif

using namespace mcvx;
using namespace mcvx::harness;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

const long double kShrink = 1.0L - 1.0L / std::exp(1.0L) + 1e-12L;

ExperimentConfig stream_config(std::size_t d, std::uint64_t seed, LearnerVariant v,
                               std::size_t C = 0) {
  json j = {{"d", d},
            {"T", 10000},
            {"seed", seed},
            {"family", {{"generator", "random_matroid"}}},
            {"learner", {{"variant", mcvx::to_string(v)}, {"exact_geometry", true}}}};
  if (C > 0) j["corruption"] = {{"strategy", "second_best"}, {"C", C}};
  return ExperimentConfig::from_json(j);
}

// Shared evidence from the uncorrupted runs of criteria 2 and 3.
struct UncorruptedEvidence {
  std::size_t runs = 0;
  std::size_t cycle_detections = 0;
  std::size_t rounds = 0;
  std::size_t volume_floor_violations = 0;
  std::size_t mistake_rounds_checked = 0;  // centroid, d <= 7
  std::size_t shrink_violations = 0;
  long double worst_ratio = 0.0L;
  bool volumes_missing = false;
} evidence;

void absorb(const ExperimentResult& r, LearnerVariant v, std::size_t d) {
  ++evidence.runs;
  evidence.cycle_detections += r.ledger.cycle_detections;
  for (const ExperimentRound& round : r.rounds) {
    const RoundRecord& rec = round.record;
    ++evidence.rounds;
    if (!rec.volume || !rec.volume_next) {
      evidence.volumes_missing = true;
      continue;
    }
    // Vol(P_t) >= 1/d! means at least one linear extension.
    if (rec.volume->extensions < 1 || rec.volume->factorial != factorial(d)) {
      ++evidence.volume_floor_violations;
    }
    if (v == LearnerVariant::kCentroid && d <= 7 && rec.outcome.mistake) {
      ++evidence.mistake_rounds_checked;
      const long double ratio = static_cast<long double>(rec.volume_next->extensions) /
                                static_cast<long double>(rec.volume->extensions);
      evidence.worst_ratio = std::max(evidence.worst_ratio, ratio);
      if (ratio > kShrink) ++evidence.shrink_violations;
    }
  }
}

Verdict criterion1() {
  std::mt19937_64 rng(1001);
  std::size_t agree = 0, largest = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MConvexSet s = testing::random_instance(rng);
    const Objective w(testing::random_distinct_weights(s.dimension(), rng));
    const auto best = argmax_bruteforce(s, w);
    largest = std::max(largest, s.enumerate().size());
    if (best.size() == 1 && argmax_exchange(s, w) == best.front()) ++agree;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 agree, largest |X| = " +
                             std::to_string(largest)};
}

Verdict mistake_bound_runs(LearnerVariant v) {
  const bool topo = v == LearnerVariant::kTopo;
  std::size_t over = 0, nonzero_gaps = 0;
  std::ostringstream worst;
  for (std::size_t d = 3; d <= 8; ++d) {
    const std::size_t bound = topo ? topo_mistake_bound(d) : centroid_mistake_bound(d);
    std::size_t max_mistakes = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto cfg = stream_config(d, (topo ? 2000 : 3000) + seed, v);
      const ExperimentResult r = run_experiment(cfg, {nullptr, true});
      max_mistakes = std::max(max_mistakes, r.ledger.mistakes);
      if (r.ledger.mistakes > bound) ++over;
      for (const ExperimentRound& round : r.rounds) {
        if (!round.record.outcome.mistake && *round.record.gap != 0.0L) ++nonzero_gaps;
      }
      absorb(r, v, d);
    }
    worst << " d=" << d << ":" << max_mistakes << "/" << bound;
  }
  std::string detail = "max mistakes/bound" + worst.str();
  if (topo) detail += ", nonzero gaps on non-mistake rounds: " + std::to_string(nonzero_gaps);
  return {over == 0 && nonzero_gaps == 0, detail};
}

Verdict criterion4() {
  std::ostringstream out;
  out << evidence.mistake_rounds_checked << " mistake rounds, worst ratio "
      << static_cast<double>(evidence.worst_ratio) << " vs limit "
      << static_cast<double>(kShrink) << ", violations " << evidence.shrink_violations;
  return {evidence.mistake_rounds_checked > 0 && evidence.shrink_violations == 0 &&
              !evidence.volumes_missing,
          out.str()};
}

Verdict criterion5() {
  return {evidence.rounds > 0 && evidence.volume_floor_violations == 0 &&
              !evidence.volumes_missing,
          std::to_string(evidence.rounds) + " rounds, " +
              std::to_string(evidence.volume_floor_violations) + " below 1/d!"};
}

Verdict criterion6() {
  json sweep = {{"d", {3, 4, 5, 6}},
                {"C", {0, 1, 3, 10}},
                {"variants", {"robust"}},
                {"seeds", 20}};
  ExperimentConfig base = stream_config(3, 6000, LearnerVariant::kRobust, 1);
  const auto rows = run_sweep(base, SweepGrid::from_config(sweep, base));
  std::size_t restart_fail = 0, segment_fail = 0, regret_fail = 0, max_restarts = 0;
  long double tightest = 0.0L;
  for (const SweepRow& r : rows) {
    if (r.restarts > r.realized_corruptions) ++restart_fail;
    if (r.max_segment_mistakes > r.mistake_bound) ++segment_fail;
    const long double bound = (r.restarts + 1.0L) * r.mistake_bound * r.max_gap +
                              r.realized_corruptions * r.max_gap;
    if (r.regret > bound) ++regret_fail;
    if (bound > 0) tightest = std::max(tightest, r.regret / bound);
    max_restarts = std::max(max_restarts, r.restarts);
  }
  std::ostringstream out;
  out << rows.size() << " runs; restarts > C: " << restart_fail
      << ", segment over bound: " << segment_fail << ", regret over bound: " << regret_fail
      << ", max regret/bound " << static_cast<double>(tightest) << ", max restarts "
      << max_restarts;
  return {rows.size() == 320 && restart_fail + segment_fail + regret_fail == 0, out.str()};
}

Verdict criterion7() {
  return {evidence.runs == 240 && evidence.cycle_detections == 0,
          std::to_string(evidence.cycle_detections) + " cycle detections over " +
              std::to_string(evidence.runs) + " uncorrupted runs"};
}

Verdict criterion8() {
  const auto cfg = ExperimentConfig::load(std::string(MCVX_CONFIG_DIR) + "/two_action_demo.json");
  const ExperimentResult r = run_experiment(cfg, {nullptr, true});
  const Point e1 = Point::unit(3, 0);
  using Arcs = std::vector<Arc>;
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  expect(r.rounds.size() == 4, "four rounds");
  if (r.rounds.size() == 4) {
    const auto& rec = [&](int t) -> const RoundRecord& { return r.rounds[t].record; };
    expect(rec(1).arcs_before == Arcs{{0, 1}}, "A after round 1 = {(1,2)}");
    expect(rec(2).arcs_before == (Arcs{{0, 1}, {2, 1}}), "A after round 2 = {(1,2),(3,2)}");
    expect(r.rounds[1].corrupted, "round 2 corrupted");
    expect(rec(2).outcome.new_arcs.empty() && rec(3).arcs_before == rec(2).arcs_before,
           "round 3 leaves A unchanged");
    expect(rec(2).proposal.action == e1 && rec(2).observed == e1 && *rec(2).gap == 0.0L,
           "round 3 x_hat = x = e1, gap 0");
    expect(rec(3).outcome.new_arcs == Arcs{{1, 2}}, "round 4 adds (2,3)");
    expect(rec(3).outcome.cycle_detected && rec(3).outcome.restarted, "round 4 restarts");
    expect(r.ledger.restarts == 1, "exactly one restart");
    for (int t = 0; t < 3; ++t) expect(!rec(t).outcome.restarted, "no early restart");
  }
  std::string detail = problems.empty() ? "arcs, gap and restart sequence reproduced"
                                        : "failed:";
  for (const auto& p : problems) detail += " [" + p + "]";
  return {problems.empty(), detail};
}

Verdict criterion9() {
  std::mt19937_64 rng(9009);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = 1'000'000;
  std::size_t coords = 0, outside = 0;
  double worst_z = 0.0;
  for (int set = 0; set < 50; ++set) {
    const std::size_t d = 2 + set % 5;  // 2..6
    const ArcSet arcs(d, testing::random_dag(d, u(rng), rng));
    const auto exact = OrderPolytope(arcs).centroid().weights();

    // Independent sampler: extensions by permutation filtering, a uniform one
    // per draw, then d sorted uniforms assigned along it.
    std::vector<std::vector<int>> extensions;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> pos(d);
      for (std::size_t k = 0; k < d; ++k) pos[perm[k]] = static_cast<int>(k);
      bool ok = true;
      for (const auto& [i, j] : arcs.arcs()) ok = ok && pos[i] < pos[j];
      if (ok) extensions.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::uniform_int_distribution<std::size_t> pick(0, extensions.size() - 1);

    std::vector<double> sum(d, 0.0), sq(d, 0.0), v(d);
    for (std::size_t k = 0; k < n; ++k) {
      for (auto& x : v) x = u(rng);
      std::sort(v.begin(), v.end(), std::greater<>());
      const auto& ext = extensions[pick(rng)];
      for (std::size_t r = 0; r < d; ++r) {
        sum[ext[r]] += v[r];
        sq[ext[r]] += v[r] * v[r];
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      const double mean = sum[i] / n;
      const double var = sq[i] / n - mean * mean;
      const double se = std::sqrt(var / n);
      const double z = std::fabs(mean - exact[i]) / se;
      worst_z = std::max(worst_z, z);
      ++coords;
      if (z > 3.0) ++outside;
    }
  }
  std::ostringstream out;
  out << coords << " coordinates over 50 sets, " << outside
      << " outside 3 SE, max |z| = " << worst_z;
  return {outside == 0, out.str()};
}

Verdict criterion10() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mcvx_acceptance_determinism";
  fs::create_directories(dir);
  std::size_t configs = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(MCVX_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const auto cfg = ExperimentConfig::load(entry.path().string());
    auto dump = [&](const std::string& tag) {
      const fs::path p = dir / (entry.path().stem().string() + tag + ".jsonl");
      {
        std::ofstream out(p, std::ios::binary);
        run_experiment(cfg, {&out, false});
      }
      std::ifstream in(p, std::ios::binary);
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    ++configs;
    const std::string a = dump("_a"), b = dump("_b");
    if (!a.empty() && a == b) ++identical;
  }
  fs::remove_all(dir);
  return {configs > 0 && identical == configs,
          std::to_string(identical) + "/" + std::to_string(configs) +
              " configs byte-identical on rerun"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exchange-optimality equivalence", criterion1},
      {2, "topological learner mistake bound",
       [] { return mistake_bound_runs(LearnerVariant::kTopo); }},
      {3, "centroid learner mistake bound",
       [] { return mistake_bound_runs(LearnerVariant::kCentroid); }},
      {4, "volume shrink on mistake rounds", criterion4},
      {5, "volume floor 1/d!", criterion5},
      {6, "corruption robustness", criterion6},
      {7, "acyclicity under honest feedback", criterion7},
      {8, "two-action scripted replay", criterion8},
      {9, "exact centroid vs Monte-Carlo", criterion9},
      {10, "seeded determinism", criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("criterion %2d: %s  %s (%s, %.1fs)\n", c.id, v.pass ? "PASS" : "FAIL",
                c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
