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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "submod/errors.h"
#include "submod/graph_gen.h"
#include "submod/instance_io.h"
#include "submod/objectives.h"
#include "submod/oracle.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

using testing::Modular;
using testing::Triangle;

TEST(MaxCut, TriangleValues) {
  CountedOracle oracle(Triangle(), 0);
  EXPECT_DOUBLE_EQ(oracle.Value({}), 0.0);
  EXPECT_DOUBLE_EQ(oracle.Value({0}), 2.0);
  EXPECT_DOUBLE_EQ(oracle.Value({0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(oracle.Value({0, 1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(oracle.Gain(2, {0, 1}), -2.0);
}

TEST(MaxCut, RejectsBadEdges) {
  EXPECT_THROW(MaxCutInstance(3, {{0, 0, 1.0}}), InputError);
  EXPECT_THROW(MaxCutInstance(3, {{0, 3, 1.0}}), InputError);
  EXPECT_THROW(MaxCutInstance(3, {{0, 1, -1.0}}), InputError);
  EXPECT_THROW(
      MaxCutInstance(3, {{0, 1, std::numeric_limits<double>::infinity()}}),
      InputError);
}

TEST(MaxCut, ComplementSymmetry) {
  Rng rng(3);
  auto g = std::make_shared<MaxCutInstance>(
      GenerateGraph(GraphModel::kErdosRenyi, {.n = 12, .p = 0.4}, 11));
  CountedOracle oracle(g, 0);
  const ElementSet full = FullSet(12);
  for (int trial = 0; trial < 50; ++trial) {
    ElementSet s;
    for (ElementId i = 0; i < 12; ++i) {
      if (UniformUnit(rng) < 0.5) s.insert(i);
    }
    EXPECT_DOUBLE_EQ(oracle.Value(s), oracle.Value(Difference(full, s)));
  }
}

TEST(Oracle, DummiesAreStrippedAndFree) {
  CountedOracle oracle(Triangle(), 2);
  EXPECT_EQ(oracle.extended_size(), 5u);
  EXPECT_TRUE(oracle.is_dummy(3));
  EXPECT_EQ(oracle.dummy(1), 4u);
  EXPECT_DOUBLE_EQ(oracle.Value({0, 3, 4}), 2.0);
  const auto before = oracle.value_queries();
  EXPECT_DOUBLE_EQ(oracle.Gain(3, {0}), 0.0);
  EXPECT_EQ(oracle.value_queries(), before);
  EXPECT_THROW(oracle.Value({5}), InputError);
  EXPECT_THROW(oracle.Gain(5, {}), InputError);
}

TEST(Oracle, CountsEveryQuery) {
  CountedOracle oracle(Modular({1, 2, 3}), 0);
  oracle.Value({0});
  oracle.Gain(1, {0}, 1.0);
  oracle.Gain(1, {0});
  EXPECT_EQ(oracle.value_queries(), 4u);
  ElementSet s{0, 2};
  oracle.Evaluate(s);
  EXPECT_EQ(oracle.value_queries(), 5u);
  EXPECT_DOUBLE_EQ(oracle.CachedValue(s), 4.0);
  EXPECT_EQ(oracle.value_queries(), 5u);
  oracle.reset_value_queries();
  EXPECT_EQ(oracle.value_queries(), 0u);
}

TEST(Oracle, GainMatchesDifference) {
  CountedOracle oracle(Modular({1.5, 2, 4}), 0);
  EXPECT_DOUBLE_EQ(oracle.Gain(2, {0}), 4.0);
  EXPECT_DOUBLE_EQ(oracle.Gain(2, {2}), 0.0);
}

TEST(Oracle, EvaluationIsPure) {
  CountedOracle oracle(Triangle(), 0);
  const double a = oracle.Value({1});
  oracle.Value({0, 2});
  EXPECT_DOUBLE_EQ(oracle.Value({1}), a);
}

TEST(Modular, RejectsNegativeWeights) {
  EXPECT_THROW(ModularInstance({1.0, -0.5}), InputError);
}

TEST(LogDet, Examples) {
  EXPECT_NEAR(LogDetPlusOne({}, 0), std::log(2.0), 1e-12);
  const std::vector<double> d3{3.0};
  EXPECT_NEAR(LogDetPlusOne(d3, 1), std::log(4.0), 1e-12);
  const std::vector<double> m{2, 1, 1, 2};
  EXPECT_NEAR(LogDetPlusOne(m, 2), std::log(4.0), 1e-12);
  auto gram = std::make_shared<GramInstance>(1, std::vector<double>{1.0});
  CountedOracle oracle(gram, 0);
  EXPECT_NEAR(oracle.Value({0}), std::log(2.0), 1e-12);
}

TEST(LogDet, RejectsAsymmetric) {
  EXPECT_THROW(GramInstance(2, {1, 0.5, 0.2, 1}), InputError);
  EXPECT_THROW(GramInstance(2, {1, 0, 0}), InputError);
}

TEST(LogDet, FeaturesBuildGram) {
  const std::vector<double> x{1, 0, 0, 2};
  GramInstance g = GramInstance::FromFeatures(2, 2, x);
  EXPECT_DOUBLE_EQ(g.at(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(g.at(1, 1), 4.0);
  EXPECT_DOUBLE_EQ(g.at(0, 1), 0.0);
}

TEST(GraphGen, ErdosRenyiExtremes) {
  EXPECT_EQ(GenerateGraph(GraphModel::kErdosRenyi, {.n = 4, .p = 1.0}, 1)
                .edges()
                .size(),
            6u);
  EXPECT_TRUE(GenerateGraph(GraphModel::kErdosRenyi, {.n = 4, .p = 0.0}, 1)
                  .edges()
                  .empty());
}

TEST(GraphGen, BarabasiAlbertEdgeCount) {
  const auto g =
      GenerateGraph(GraphModel::kBarabasiAlbert, {.n = 5, .m = 2}, 7);
  EXPECT_EQ(g.edges().size(), 6u);
}

TEST(GraphGen, WattsStrogatzKeepsEdgeCount) {
  const auto g = GenerateGraph(GraphModel::kWattsStrogatz,
                               {.n = 20, .p = 0.3, .degree = 4}, 9);
  EXPECT_EQ(g.edges().size(), 40u);
}

TEST(GraphGen, SeedDeterminism) {
  const GraphParams params{.n = 30, .p = 0.2};
  const auto a = GenerateGraph(GraphModel::kErdosRenyi, params, 5);
  const auto b = GenerateGraph(GraphModel::kErdosRenyi, params, 5);
  ASSERT_EQ(a.edges().size(), b.edges().size());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
  }
}

TEST(GraphGen, InvalidParameters) {
  EXPECT_THROW(GenerateGraph(GraphModel::kErdosRenyi, {.n = 4, .p = 1.5}, 1),
               InputError);
  EXPECT_THROW(GenerateGraph(GraphModel::kBarabasiAlbert, {.n = 3, .m = 3}, 1),
               InputError);
  EXPECT_THROW(
      GenerateGraph(GraphModel::kWattsStrogatz, {.n = 6, .degree = 3}, 1),
      InputError);
  EXPECT_THROW(ParseGraphModel("grid"), InputError);
  EXPECT_EQ(ParseGraphModel("ba"), GraphModel::kBarabasiAlbert);
}

TEST(InstanceIo, EdgeListRoundTrip) {
  const auto g = GenerateGraph(GraphModel::kErdosRenyi, {.n = 15, .p = 0.3}, 4);
  std::stringstream buffer;
  WriteEdgeList(buffer, g);
  const auto back = ReadEdgeList(buffer);
  ASSERT_EQ(back.size(), g.size());
  ASSERT_EQ(back.edges().size(), g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    EXPECT_EQ(back.edges()[i].u, g.edges()[i].u);
    EXPECT_EQ(back.edges()[i].w, g.edges()[i].w);
  }
}

TEST(InstanceIo, EdgeListCommentsAndErrors) {
  std::istringstream ok("# triangle\n3 3\n0 1 1\n\n1 2 1\n0 2 1\n");
  EXPECT_EQ(ReadEdgeList(ok).edges().size(), 3u);
  std::istringstream missing("3 3\n0 1 1\n");
  EXPECT_THROW(ReadEdgeList(missing), InputError);
  std::istringstream extra("2 1\n0 1 1\n0 1 1\n");
  EXPECT_THROW(ReadEdgeList(extra), InputError);
  std::istringstream garbage("2 x\n");
  EXPECT_THROW(ReadEdgeList(garbage), InputError);
}

TEST(InstanceIo, GramCsv) {
  std::istringstream in("2,1\n1,2\n");
  const auto g = ReadGramCsv(in);
  EXPECT_EQ(g.size(), 2u);
  const std::vector<ElementId> both{0, 1};
  EXPECT_NEAR(g.Evaluate(both), std::log(4.0), 1e-12);
}

TEST(InstanceIo, PartitionRoundTrip) {
  const auto m = PartitionMatroid::Contiguous(6, 3, 1);
  std::stringstream buffer;
  WritePartitionMatroid(buffer, m);
  const auto back = ReadPartitionMatroid(buffer, 6);
  EXPECT_EQ(back.num_blocks(), 3u);
  EXPECT_EQ(back.rank(), 3u);
  for (ElementId e = 0; e < 6; ++e) EXPECT_EQ(back.block_of(e), m.block_of(e));
}

TEST(Random, DerivedSeedsDiffer) {
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_EQ(DeriveSeed(7, 3), DeriveSeed(7, 3));
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(UniformIndex(rng, 5), 5u);
    const double u = UniformUnit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace submod
