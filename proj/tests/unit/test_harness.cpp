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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mcvx/error.hpp"
#include "mcvx/harness/agent.hpp"
#include "mcvx/harness/config.hpp"
#include "mcvx/harness/descriptor.hpp"
#include "mcvx/harness/experiment.hpp"
#include "mcvx/harness/sequence.hpp"
#include "mcvx/harness/sweep.hpp"
#include "mcvx/harness/trace.hpp"
#include "mcvx/harness/verify.hpp"

namespace mcvx::harness {
namespace {

using nlohmann::json;

const Point e1 = Point::unit(3, 0);
const Point e2 = Point::unit(3, 1);
const Point e3 = Point::unit(3, 2);

std::string config_dir() {
  const char* dir = std::getenv("MCVX_CONFIG_DIR");
  return dir != nullptr ? dir : "configs";
}

std::vector<json> run_trace(const ExperimentConfig& cfg, ExperimentResult* out = nullptr) {
  std::stringstream buffer;
  ExperimentResult r = run_experiment(cfg, {&buffer, false});
  if (out != nullptr) *out = std::move(r);
  return read_trace(buffer);
}

ExperimentConfig demo(bool corrupted) {
  json j = {{"d", 3},
            {"T", 4},
            {"family", {{"generator", "two_action_demo"}}},
            {"agent", {{"w_star", {0.9, 0.5, 0.1}}}},
            {"learner", {{"variant", corrupted ? "robust" : "centroid"}}}};
  if (corrupted) j["corruption"] = {{"strategy", "fixed_rounds"}, {"rounds", {2}}};
  return ExperimentConfig::from_json(j);
}

ExperimentConfig random_config(std::size_t d, std::size_t T, std::uint64_t seed,
                               const std::string& variant, std::size_t C = 0) {
  json j = {{"d", d},
            {"T", T},
            {"seed", seed},
            {"family", {{"generator", "random_matroid"}}},
            {"learner", {{"variant", variant}}}};
  if (C > 0) j["corruption"] = {{"strategy", "second_best"}, {"C", C}};
  return ExperimentConfig::from_json(j);
}

TEST(Descriptor, RoundTripsEveryFamily) {
  const std::vector<MConvexSet> sets{
      MConvexSet::uniform_matroid(4, 2),
      MConvexSet::graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}}),
      MConvexSet::partition_matroid({{0, 2}, {1}}, {1, 1}, 2),
      MConvexSet::lattice_simplex(3, 2, 3),
      MConvexSet::segment_embed(3, 2, 1),
      MConvexSet::explicit_points(3, {e1, e2})};
  for (const auto& s : sets) {
    const json j = describe(s);
    const MConvexSet back = set_from_json(j);
    EXPECT_EQ(back.enumerate(), s.enumerate()) << j.dump();
    EXPECT_EQ(describe(back), j);
  }
}

TEST(Descriptor, Errors) {
  EXPECT_THROW(set_from_json({{"family", "nope"}}), ConfigError);
  EXPECT_THROW(set_from_json({{"family", "uniform_matroid"}, {"d", 3}}), ConfigError);
  EXPECT_THROW(set_from_json({{"family", "uniform_matroid"}, {"d", 3}, {"m", 5}}),
               ConfigError);
}

TEST(Config, ParsesAndReportsErrors) {
  const auto cfg = ExperimentConfig::load(config_dir() + "/two_action_demo.json");
  EXPECT_EQ(cfg.d, 3u);
  EXPECT_EQ(cfg.horizon, 4u);
  EXPECT_EQ(cfg.learner.variant, LearnerVariant::kRobust);
  EXPECT_EQ(ExperimentConfig::from_json(cfg.to_json()).to_json(), cfg.to_json());
  EXPECT_THROW(ExperimentConfig::load("/nonexistent.json"), ConfigError);
  EXPECT_THROW(ExperimentConfig::from_json({{"T", 3}}), ConfigError);
  EXPECT_THROW(ExperimentConfig::from_json(
                   {{"d", 3}, {"family", {}}, {"learner", {{"variant", "x"}}}}),
               ConfigError);
  EXPECT_THROW(run_experiment(ExperimentConfig::from_json(
                   {{"d", 3}, {"T", 1}, {"family", {{"generator", "bogus"}}}})),
               ConfigError);
}

TEST(Config, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 1), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 1), derive_seed(2, 1));
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(Sequence, TwoActionScript) {
  SequenceGenerator g({{"generator", "two_action_demo"}}, 3, 0);
  const std::vector<std::vector<Point>> expected{{e2, e1}, {e3, e2}, {e2, e1}, {e3, e2}};
  for (const auto& pts : expected) EXPECT_EQ(g.next().enumerate(), pts);
}

TEST(Sequence, SegmentEmbedSixteen) {
  EXPECT_EQ(default_segment_half_length(16), 1);
  EXPECT_EQ(default_segment_half_length(64), 2);
  SequenceGenerator g({{"generator", "segment_embed"}}, 17, 0);
  for (std::size_t t = 0; t < 20; ++t) {
    const MConvexSet s = g.next();
    ASSERT_EQ(s.dimension(), 17u);
    const auto pts = s.enumerate();
    ASSERT_EQ(pts.size(), 3u);
    const std::size_t axis = t % 16;
    EXPECT_EQ(pts.front()[axis], -1);
    EXPECT_EQ(pts.back()[axis], 1);
    EXPECT_EQ(pts.back()[16], -1);
    EXPECT_TRUE(verify_m_convexity(s));
  }
}

TEST(Sequence, FixedIsConstantAndRandomIsSeeded) {
  SequenceGenerator fixed(
      {{"generator", "fixed"}, {"set", {{"family", "uniform_matroid"}, {"d", 4}, {"m", 2}}}},
      4, 0);
  const json first = describe(fixed.next());
  for (int t = 0; t < 5; ++t) EXPECT_EQ(describe(fixed.next()), first);
  EXPECT_THROW(SequenceGenerator(
                   {{"generator", "fixed"},
                    {"set", {{"family", "uniform_matroid"}, {"d", 4}, {"m", 2}}}},
                   5, 0),
               ConfigError);
  for (const std::string kind : {"random_matroid", "random_uniform", "random_lattice"}) {
    SequenceGenerator a({{"generator", kind}}, 5, 9), b({{"generator", kind}}, 5, 9);
    for (int t = 0; t < 50; ++t) {
      const MConvexSet s = a.next();
      ASSERT_EQ(describe(s), describe(b.next()));
      ASSERT_EQ(s.dimension(), 5u);
      ASSERT_TRUE(verify_m_convexity(s)) << describe(s).dump();
    }
  }
}

TEST(Agent, OptimalAndSecondBest) {
  const Objective w({3, 2, 1});
  const auto X12 = MConvexSet::explicit_points(3, {e1, e2});
  const auto X23 = MConvexSet::explicit_points(3, {e2, e3});
  const ArcSet none(3);
  Agent honest({w}, {}, 4);
  EXPECT_EQ(honest.act(X12, 1, none).point, e1);
  EXPECT_FALSE(honest.act(X12, 1, none).corrupted);

  CorruptionPlan plan;
  plan.strategy = CorruptionStrategy::kFixedRounds;
  plan.rounds = {2, 3};
  plan.level = 2;
  Agent liar({w}, plan, 4);
  const AgentAction a = liar.act(X23, 2, none);
  EXPECT_EQ(a.point, e3);
  EXPECT_TRUE(a.corrupted);
  const AgentAction s = liar.act(MConvexSet::uniform_matroid(3, 3), 3, none);
  EXPECT_EQ(s.point, Point({1, 1, 1}));
  EXPECT_TRUE(s.skipped);
  EXPECT_FALSE(s.corrupted);
}

TEST(Agent, SecondBestIsBestStrictlyBelowOptimum) {
  const Objective w({0.4, 0.9, 0.1, 0.7});
  const auto s = MConvexSet::uniform_matroid(4, 2);
  const Point opt = argmax_exchange(s, w);
  const auto sb = second_best(s, w, opt);
  ASSERT_TRUE(sb);
  long double best_below = -1;
  for (const Point& p : s.enumerate()) {
    if (w.value(p) < w.value(opt)) best_below = std::max(best_below, w.value(p));
  }
  EXPECT_EQ(w.value(*sb), best_below);
  EXPECT_FALSE(second_best(MConvexSet::uniform_matroid(4, 4), w, Point({1, 1, 1, 1})));
}

TEST(Corruption, TargetRoundsCountAndDeterminism) {
  const auto plan = CorruptionPlan::from_json({{"strategy", "second_best"}, {"C", 10}}, 4);
  const auto rounds = plan.target_rounds(100);
  EXPECT_EQ(rounds.size(), 10u);
  EXPECT_EQ(rounds, plan.target_rounds(100));
  for (auto r : rounds) EXPECT_TRUE(r >= 1 && r <= 100);
  EXPECT_EQ(plan.target_rounds(5).size(), 5u);
  EXPECT_THROW(CorruptionPlan::from_json({{"strategy", "sneaky"}}, 0), ConfigError);
}

TEST(Experiment, EmptyHorizon) {
  auto cfg = random_config(4, 0, 1, "centroid");
  ExperimentResult r;
  const auto trace = run_trace(cfg, &r);
  EXPECT_EQ(r.ledger.regret, 0.0L);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[1].at("T"), 0);
  EXPECT_TRUE(verify_trace(trace).ok());
}

TEST(Experiment, LedgerIdentities) {
  for (const std::string variant : {"topo", "centroid", "robust"}) {
    for (std::size_t C : {0u, 5u}) {
      if (C > 0 && variant != "robust") continue;
      ExperimentResult r;
      run_trace(random_config(5, 600, 3, variant, C), &r);
      const RegretLedger& l = r.ledger;
      long double sum = 0;
      for (long double g : l.gaps) sum += g;
      EXPECT_EQ(sum, l.regret);
      EXPECT_LE(l.regret_star, l.regret + l.realized_corruptions * l.max_gap + 1e-12L);
      EXPECT_LE(l.realized_corruptions + l.skipped_corruptions, C);
      EXPECT_LE(l.restarts, l.realized_corruptions);
    }
  }
}

TEST(Verify, ValidTracesHaveNoViolations) {
  for (const std::string variant : {"topo", "centroid", "robust"}) {
    auto cfg = random_config(5, 500, 8, variant);
    const auto report = verify_trace(run_trace(cfg));
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_EQ(report.rounds, 500u);
  }
  auto lattice = ExperimentConfig::load(config_dir() + "/lattice_d4.json");
  EXPECT_TRUE(verify_trace(run_trace(lattice)).ok());
}

TEST(Verify, CorruptedDemoFlagsRoundTwoOnly) {
  const auto report = verify_trace(run_trace(demo(true)));
  ASSERT_EQ(report.violations.size(), 1u) << report.to_json().dump();
  EXPECT_EQ(report.violations[0].round, 2u);
  EXPECT_EQ(report.violations[0].kind, "optimality");
  EXPECT_TRUE(verify_trace(run_trace(demo(false))).ok());
}

TEST(Verify, RobustUnderCorruptionOnlyFlagsCorruptedRounds) {
  ExperimentResult r;
  const auto trace = run_trace(random_config(4, 800, 12, "robust", 6), &r);
  const auto report = verify_trace(trace);
  EXPECT_EQ(report.count("optimality"), report.violations.size());
  EXPECT_EQ(report.count("optimality"), r.ledger.realized_corruptions);
}

TEST(Verify, TamperedGapIsOneArithmeticViolation) {
  auto trace = run_trace(random_config(4, 200, 2, "centroid"));
  trace[50]["gap"] = trace[50]["gap"].get<double>() + 0.25;
  const auto report = verify_trace(trace);
  ASSERT_EQ(report.violations.size(), 1u) << report.to_json().dump();
  EXPECT_EQ(report.violations[0].kind, "gap");
  EXPECT_EQ(report.violations[0].round, 50u);
}

TEST(Verify, OtherTamperingIsCaught) {
  const auto clean = run_trace(random_config(6, 100, 2, "centroid"));
  auto first_mistake = [&] {
    for (std::size_t i = 1; i < clean.size(); ++i) {
      if (clean[i].value("mistake", false)) return i;
    }
    return std::size_t{0};
  }();
  ASSERT_GT(first_mistake, 0u);

  auto t1 = clean;
  t1[first_mistake]["x_hat"] = t1[first_mistake]["x"];
  EXPECT_GT(verify_trace(t1).count("suggestion"), 0u);

  auto t2 = clean;
  t2[first_mistake]["new_arcs"] = json::array();
  t2[first_mistake]["new_arc_count"] = 0;
  EXPECT_GT(verify_trace(t2).count("arcs"), 0u);

  auto t3 = clean;
  t3[first_mistake]["volume"] = "1/24";
  EXPECT_GT(verify_trace(t3).count("volume"), 0u);

  auto t4 = clean;
  t4.back()["mistakes"] = 0;
  EXPECT_GT(verify_trace(t4).count("summary"), 0u);

  auto t5 = clean;
  t5[5]["corrupted"] = true;
  EXPECT_EQ(verify_trace(t5).count("corruption_flag"), 1u);

  auto t6 = clean;
  auto w = t6[5]["w_hat"].get<std::vector<double>>();
  w[1] = w[0];
  t6[5]["w_hat"] = w;
  EXPECT_GT(verify_trace(t6).count("estimate"), 0u);

  EXPECT_THROW(verify_trace({}), TraceError);
  std::istringstream garbage("not json\n");
  EXPECT_THROW(read_trace(garbage), TraceError);
  EXPECT_THROW(verify_trace_file("/nonexistent.jsonl"), TraceError);
}

TEST(Determinism, SameSeedSameBytes) {
  auto dump = [](const ExperimentConfig& cfg) {
    std::ostringstream out;
    run_experiment(cfg, {&out, false});
    return out.str();
  };
  const auto cfg = random_config(6, 300, 5, "robust", 4);
  EXPECT_EQ(dump(cfg), dump(cfg));
  EXPECT_NE(dump(cfg), dump(cfg.with_seed(6)));
}

TEST(FigureCsv, ColumnsAndRestartRow) {
  std::ostringstream out;
  write_figure_csv(run_trace(demo(true)), out);
  EXPECT_EQ(out.str(),
            "round,cum_regret,mistakes,volume_log,restart_flag\n"
            "1,0.0,0," + json(std::log(0.5)).dump() + ",0\n"
            "2,0.0,0," + json(std::log(1.0 / 3.0)).dump() + ",0\n"
            "3,0.0,0," + json(std::log(1.0 / 3.0)).dump() + ",0\n"
            "4,0.4,1,0,1\n");
}

TEST(Sweep, GridOrderAndThreadIndependence) {
  auto base = random_config(3, 200, 40, "robust");
  const SweepGrid grid = SweepGrid::from_config(
      {{"d", {3, 4}}, {"C", {0, 2}}, {"variants", {"robust", "topo"}}, {"seeds", 2}}, base);
  EXPECT_EQ(grid.size(), 16u);
  // topo with corruption may hit a cycle and refuse; keep topo uncorrupted.
  SweepGrid safe = grid;
  safe.variants = {LearnerVariant::kRobust};
  const auto serial = run_sweep(base, safe, 1);
  const auto parallel = run_sweep(base, safe, 4);
  std::ostringstream a, b;
  write_sweep_csv(serial, a);
  write_sweep_csv(parallel, b);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(serial.size(), 8u);
  EXPECT_EQ(serial[0].d, 3u);
  EXPECT_EQ(serial[0].seed, 40u);
  EXPECT_EQ(serial[1].seed, 41u);
  EXPECT_EQ(serial[2].level, 2u);
  EXPECT_EQ(serial[7].d, 4u);
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "d,C,variant,seed,T,mistakes,restarts,cycle_detections,realized_C,regret,"
            "regret_star,g_max,max_segment_mistakes,mistake_bound");
  EXPECT_THROW(SweepGrid::from_config({{"d", json::array()}}, base), ConfigError);
}

}  // namespace
}  // namespace mcvx::harness
