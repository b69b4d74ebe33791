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

#include <gtest/gtest.h>

#include <memory>

#include "submod/errors.h"
#include "submod/graph_gen.h"
#include "submod/matroid.h"
#include "submod/oracle.h"
#include "submod/pipelines.h"
#include "test_util.h"

namespace submod {
namespace {

using testing::K4;
using testing::Modular;

std::shared_ptr<const MaxCutInstance> RandomGraph(std::size_t n, double p,
                                                  std::uint64_t seed) {
  return std::make_shared<MaxCutInstance>(
      GenerateGraph(GraphModel::kErdosRenyi, {.n = n, .p = p}, seed));
}

TEST(Rounds, Counts) {
  EXPECT_EQ(InterpolationRounds(10.0 / 27.0), 3u);
  EXPECT_EQ(InterpolationRounds(0.1), 12u);
  EXPECT_EQ(GuidanceSearchRounds(1.0), 4u);
  EXPECT_EQ(GuidedPhaseRounds(0.5), 10u);
  EXPECT_THROW(InterpolationRounds(0.0), InputError);
}

TEST(Randomized, CompleteGraphAlwaysOptimal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CountedOracle oracle(K4(), 2);
    const auto r = RunRandomized(oracle, SizeConstraint{2}, {}, seed);
    EXPECT_DOUBLE_EQ(r.record.value, 4.0);
    EXPECT_EQ(r.record.algorithm, "fastls_guided_rg");
    EXPECT_LE(r.solution.size(), 2u);
  }
}

TEST(Randomized, RecordMatchesOracle) {
  auto g = RandomGraph(20, 0.3, 5);
  CountedOracle oracle(g, 5);
  oracle.Value({});
  const auto before = oracle.value_queries();
  const auto r = RunRandomized(oracle, SizeConstraint{5}, {}, 3);
  EXPECT_EQ(r.record.value_queries, oracle.value_queries() - before);
  EXPECT_DOUBLE_EQ(r.record.value, oracle.Value(r.solution));
  EXPECT_EQ(r.record.seed, 3u);
  EXPECT_EQ(r.record.k, 5u);
}

TEST(Randomized, MatroidFeasibleAndDeterministic) {
  auto g = RandomGraph(16, 0.3, 6);
  auto base = std::make_shared<PartitionMatroid>(
      PartitionMatroid::Contiguous(16, 4, 2));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    ExtendedMatroid m1(base), m2(base);
    CountedOracle o1(g, m1.rank()), o2(g, m2.rank());
    const PipelineParams params{.t = kMatroidSwitchTime};
    const auto a = RunRandomized(o1, m1, params, seed);
    const auto b = RunRandomized(o2, m2, params, seed);
    EXPECT_EQ(a.solution, b.solution);
    EXPECT_EQ(a.record.value_queries, b.record.value_queries);
    EXPECT_TRUE(m1.Independent(a.solution));
  }
}

TEST(Determ, ModularReachesOptimum) {
  CountedOracle oracle(Modular({3, 9, 4, 7, 1, 8, 2}), 3);
  const PipelineParams params{.eps = 0.5, .ell = 2};
  const auto r = RunDeterm(oracle, SizeConstraint{3}, params);
  EXPECT_EQ(r.solution, ElementSet({1, 3, 5}));
  EXPECT_DOUBLE_EQ(r.record.value, 24.0);
  EXPECT_EQ(r.record.algorithm, "determ");
  EXPECT_TRUE(r.record.certified);
}

TEST(Determ, BeatsLocalOptimumAndIsDeterministic) {
  for (int trial = 0; trial < 5; ++trial) {
    auto g = RandomGraph(12, 0.4, 40 + trial);
    const PipelineParams params{.eps = 10.0 / 27.0, .ell = 3};
    CountedOracle o1(g, 6), o2(g, 6);
    const auto a = RunDeterm(o1, SizeConstraint{6}, params);
    const auto b = RunDeterm(o2, SizeConstraint{6}, params);
    EXPECT_EQ(a.solution, b.solution);
    EXPECT_EQ(a.record.value_queries, b.record.value_queries);
    EXPECT_GE(a.record.value, *a.guide.cached_value());
    EXPECT_LE(a.solution.size(), 6u);
    EXPECT_GT(a.candidates, 1u);
  }
}

TEST(Determ, SingleRoundEll) {
  CountedOracle oracle(Modular({5, 4, 3}), 2);
  const PipelineParams params{.eps = 0.5, .ell = 1};
  const auto r = RunDeterm(oracle, SizeConstraint{2}, params);
  EXPECT_DOUBLE_EQ(r.record.value, 9.0);
}

TEST(Determ, MatroidFeasible) {
  auto g = RandomGraph(12, 0.4, 90);
  ExtendedMatroid m(std::make_shared<PartitionMatroid>(
      PartitionMatroid::Contiguous(12, 3, 1)));
  CountedOracle oracle(g, m.rank());
  const PipelineParams params{.eps = 0.5, .t = kMatroidSwitchTime, .ell = 2};
  const auto r = RunDeterm(oracle, m, params);
  EXPECT_TRUE(m.Independent(r.solution));
  EXPECT_DOUBLE_EQ(r.record.value, oracle.Value(r.solution));
}

TEST(Determ, LevelLimitRaises) {
  auto g = RandomGraph(15, 0.4, 91);
  CountedOracle oracle(g, 6);
  const PipelineParams params{.eps = 0.5, .ell = 3, .max_level_size = 1};
  EXPECT_THROW(RunDeterm(oracle, SizeConstraint{6}, params), ResourceError);
}

TEST(Determ, PoolCapClearsCertification) {
  auto g = RandomGraph(15, 0.4, 92);
  CountedOracle oracle(g, 6);
  const PipelineParams params{.eps = 0.5, .ell = 3, .pool_cap = 1};
  const auto r = RunDeterm(oracle, SizeConstraint{6}, params);
  EXPECT_FALSE(r.record.certified);
  EXPECT_LE(r.solution.size(), 6u);
}

TEST(Determ, EllAboveBudgetRejected) {
  CountedOracle oracle(Modular({5, 4, 3}), 2);
  const PipelineParams params{.eps = 0.5, .ell = 3};
  EXPECT_THROW(RunDeterm(oracle, SizeConstraint{2}, params), InputError);
}

TEST(DetermRandom, FeasibleAndSeeded) {
  auto g = RandomGraph(15, 0.3, 93);
  const PipelineParams params{.eps = 0.5, .ell = 3};
  CountedOracle o1(g, 6), o2(g, 6);
  const auto a = RunDetermRandom(o1, SizeConstraint{6}, params, 4);
  const auto b = RunDetermRandom(o2, SizeConstraint{6}, params, 4);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_LE(a.solution.size(), 6u);
  EXPECT_EQ(a.record.algorithm, "determ_random");
}

TEST(NearlyLinear, ModularTopSet) {
  CountedOracle oracle(Modular({3, 9, 4, 7, 1, 8, 2, 6}), 4);
  const PipelineParams params{
      .eps = 0.2, .t = kNearlyLinearSwitchTime, .ell1 = 2, .ell2 = 2};
  const auto r = RunNearlyLinear(oracle, SizeConstraint{4}, params);
  EXPECT_EQ(r.solution, ElementSet({1, 3, 5, 7}));
  EXPECT_EQ(r.record.algorithm, "nearly_linear");
}

TEST(NearlyLinear, FeasibleAndDeterministic) {
  auto g = RandomGraph(60, 0.1, 94);
  const PipelineParams params{
      .eps = 0.5, .t = kNearlyLinearSwitchTime, .ell1 = 2, .ell2 = 2};
  CountedOracle o1(g, 10), o2(g, 10);
  const auto a = RunNearlyLinear(o1, SizeConstraint{10}, params);
  const auto b = RunNearlyLinear(o2, SizeConstraint{10}, params);
  EXPECT_LE(a.solution.size(), 10u);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.record.value_queries, b.record.value_queries);
  EXPECT_DOUBLE_EQ(a.record.value, o1.Value(a.solution));
  EXPECT_GE(a.record.value, *a.guide.cached_value());
}

}  // namespace
}  // namespace submod
