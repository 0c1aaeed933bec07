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

#include <random>

#include <gtest/gtest.h>

#include "instances.hpp"
#include "mcvx/error.hpp"
#include "mcvx/linopt.hpp"

namespace mcvx {
namespace {

const Point e1 = Point::unit(3, 0);
const Point e2 = Point::unit(3, 1);
const Point e3 = Point::unit(3, 2);

TEST(ArgmaxExchange, UniformMatroid) {
  const auto s = MConvexSet::uniform_matroid(4, 2);
  EXPECT_EQ(argmax_exchange(s, Objective({0.9, 0.1, 0.5, 0.3})), Point({1, 0, 1, 0}));
}

TEST(ArgmaxExchange, TwoActionSet) {
  const auto s = MConvexSet::explicit_points(3, {e1, e2});
  EXPECT_EQ(argmax_exchange(s, Objective({3, 2, 1})), e1);
}

TEST(ArgmaxExchange, LatticeSimplex) {
  EXPECT_EQ(argmax_exchange(MConvexSet::lattice_simplex(3, 2, 2), Objective({3, 2, 1})),
            Point({2, 0, 0}));
}

TEST(ArgmaxExchange, LargeSetWithoutEnumeration) {
  // 40 choose 20 points; local search only touches neighbors.
  const auto s = MConvexSet::uniform_matroid(40, 20).with_enumeration_limit(10);
  std::vector<double> w(40);
  for (int i = 0; i < 40; ++i) w[i] = (i * 7 % 40) / 40.0;
  const Point x = argmax_exchange(s, Objective(w));
  for (int i = 0; i < 40; ++i) EXPECT_EQ(x[i], w[i] >= 0.5 ? 1 : 0) << i;
}

TEST(ArgmaxBruteforce, Examples) {
  const auto s = MConvexSet::uniform_matroid(3, 1);
  EXPECT_EQ(argmax_bruteforce(s, Objective({1, 1, 1})),
            (std::vector<Point>{e3, e2, e1}));
  EXPECT_EQ(argmax_bruteforce(s, Objective({2, 1, 0})), (std::vector<Point>{e1}));
  EXPECT_EQ(argmax_bruteforce(MConvexSet::lattice_simplex(2, 2, 2), Objective({1, 2})),
            (std::vector<Point>{{0, 2}}));
}

TEST(IsExchangeOptimal, Examples) {
  const Objective w({3, 2, 1});
  EXPECT_TRUE(is_exchange_optimal(MConvexSet::explicit_points(3, {e1, e2}), w, e1));
  EXPECT_FALSE(is_exchange_optimal(MConvexSet::explicit_points(3, {e2, e3}), w, e3));
  EXPECT_TRUE(is_exchange_optimal(MConvexSet::uniform_matroid(3, 3), w, {1, 1, 1}));
  EXPECT_THROW(is_exchange_optimal(MConvexSet::uniform_matroid(3, 1), w, {0, 0, 0}),
               NotInSet);
}

TEST(Objective, RejectsNonFinite) {
  EXPECT_THROW(Objective({1.0, std::nan("")}), Error);
  EXPECT_THROW(Objective({1.0, INFINITY}), Error);
  EXPECT_TRUE(Objective({1, 2, 3}).distinct());
  EXPECT_FALSE(Objective({1, 2, 1}).distinct());
}

TEST(Property, ExchangeOptimalityEquivalence) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const MConvexSet s = testing::random_instance(rng);
    const Objective w(testing::random_distinct_weights(s.dimension(), rng));
    const auto best = argmax_bruteforce(s, w);
    ASSERT_EQ(best.size(), 1u);
    ASSERT_EQ(argmax_exchange(s, w), best.front());
    for (const Point& x : s.enumerate()) {
      ASSERT_EQ(is_exchange_optimal(s, w, x), x == best.front());
    }
  }
}

TEST(Property, ArgmaxScaleInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 300; ++trial) {
    const MConvexSet s = testing::random_instance(rng);
    const Objective w(testing::random_distinct_weights(s.dimension(), rng));
    ASSERT_EQ(argmax_exchange(s, w), argmax_exchange(s, w.scaled(scale(rng))));
  }
}

TEST(Property, TiedWeightsStillReachAMaximizer) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> level(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const MConvexSet s = testing::random_instance(rng);
    std::vector<double> w(s.dimension());
    for (auto& x : w) x = level(rng);
    const Objective obj(w);
    const auto best = argmax_bruteforce(s, obj);
    const Point x = argmax_exchange(s, obj);
    ASSERT_NE(std::find(best.begin(), best.end(), x), best.end());
  }
}

}  // namespace
}  // namespace mcvx
