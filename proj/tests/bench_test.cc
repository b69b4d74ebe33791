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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "submod/brute_force.h"
#include "submod/errors.h"
#include "submod/experiment.h"
#include "submod/graph_gen.h"
#include "submod/matroid.h"
#include "submod/oracle.h"
#include "test_util.h"

namespace submod {
namespace {

using testing::Modular;
using testing::Triangle;

ExperimentConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in);
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the wall_ms column (last) from a trials CSV.
std::string WithoutWallTime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

TEST(BruteForce, Examples) {
  CountedOracle mod(Modular({5, 4, 3}), 0);
  const auto a = BruteForceOpt(mod, SizeConstraint{2});
  EXPECT_EQ(a.set, ElementSet({0, 1}));
  EXPECT_DOUBLE_EQ(a.value, 9.0);
  EXPECT_EQ(a.sets_examined, 7u);

  CountedOracle tri(Triangle(), 0);
  const auto b = BruteForceOpt(tri, SizeConstraint{3});
  EXPECT_DOUBLE_EQ(b.value, 2.0);
  EXPECT_EQ(b.set, ElementSet({0}));
}

TEST(BruteForce, MatroidOptimum) {
  CountedOracle oracle(Modular({5, 4, 3, 2}), 2);
  ExtendedMatroid m(std::make_shared<PartitionMatroid>(
      PartitionMatroid::Contiguous(4, 2, 1)));
  const auto r = BruteForceOpt(oracle, m);
  EXPECT_EQ(r.set, ElementSet({0, 2}));
  EXPECT_DOUBLE_EQ(r.value, 8.0);
}

TEST(BruteForce, MatchesIndependentEnumeration) {
  for (int trial = 0; trial < 10; ++trial) {
    auto g = std::make_shared<MaxCutInstance>(GenerateGraph(
        GraphModel::kErdosRenyi, {.n = 11, .p = 0.4}, 60 + trial));
    CountedOracle oracle(g, 0);
    const auto r = BruteForceOpt(oracle, SizeConstraint{4});
    EXPECT_DOUBLE_EQ(r.value, testing::ExhaustiveMax(*g, 4).value);
  }
}

TEST(BruteForce, LimitRaises) {
  CountedOracle oracle(Modular(std::vector<double>(40, 1.0)), 0);
  EXPECT_THROW(BruteForceOpt(oracle, SizeConstraint{20}, 1000), ResourceError);
}

TEST(Config, KeyValueAndJsonAgree) {
  const auto a = Parse(
      "# grid\ninstance = er\nn = 30  # vertices\np = 0.2\nk = 3,5\n"
      "algorithms = standard_greedy,random_greedy\ntrials = 2\n"
      "master_seed = 9\neps = 0.25\n");
  std::istringstream json(
      R"({"instance": "er", "n": 30, "p": 0.2, "k": [3, 5],
          "algorithms": ["standard_greedy", "random_greedy"], "trials": 2,
          "master_seed": 9, "eps": 0.25})");
  const auto b = ParseConfigJson(json);
  EXPECT_EQ(SerializeConfig(a), SerializeConfig(b));
  EXPECT_EQ(a.ks, (std::vector<std::size_t>{3, 5}));
  EXPECT_EQ(SerializeConfig(Parse(SerializeConfig(a))), SerializeConfig(a));
}

TEST(Config, Errors) {
  EXPECT_THROW(Parse("bogus = 1\n"), InputError);
  EXPECT_THROW(Parse("k = 3\nalgorithms = nope\n"), InputError);
  EXPECT_THROW(Parse("n = x\n"), InputError);
  EXPECT_THROW(Parse("just words\n"), InputError);
  std::istringstream bad_json("{\"k\": ");
  EXPECT_THROW(ParseConfigJson(bad_json), InputError);
}

TEST(Experiment, SingleRow) {
  const auto c = Parse(
      "instance = modular\nweights = 5,4,3\nk = 2\n"
      "algorithms = standard_greedy\n");
  const auto report = RunExperiment(c);
  ASSERT_EQ(report.trials.size(), 1u);
  EXPECT_DOUBLE_EQ(report.trials[0].record.value, 9.0);
  ASSERT_EQ(report.summary.size(), 1u);
  EXPECT_DOUBLE_EQ(*report.summary[0].normalized_value, 1.0);
}

TEST(Experiment, GridShape) {
  const auto c = Parse(
      "instance = er\nn = 25\np = 0.2\nk = 2,4,6\n"
      "algorithms = standard_greedy,random_greedy,fastls,fastls_two_pass,"
      "fastls_guided_rg\ntrials = 20\nthreads = 2\n");
  const auto report = RunExperiment(c);
  ASSERT_EQ(report.trials.size(), 300u);
  EXPECT_EQ(report.failed_trials, 0u);
  EXPECT_EQ(report.summary.size(), 15u);
  // Ordered by (k, algorithm, trial).
  EXPECT_EQ(report.trials[0].record.k, 2u);
  EXPECT_EQ(report.trials[0].record.algorithm, "standard_greedy");
  EXPECT_EQ(report.trials[20].record.algorithm, "random_greedy");
  EXPECT_EQ(report.trials[100].record.k, 4u);
}

TEST(Experiment, SummaryRecomputes) {
  const auto c = Parse(
      "instance = ba\nn = 30\nm = 2\nk = 4,8\n"
      "algorithms = standard_greedy,random_greedy\ntrials = 6\n");
  const auto report = RunExperiment(c);
  std::map<std::pair<std::string, std::size_t>, std::vector<double>> values;
  for (const auto& t : report.trials) {
    values[{t.record.algorithm, t.record.k}].push_back(t.record.value);
  }
  std::map<std::size_t, double> greedy_mean;
  for (const auto& row : report.summary) {
    const auto& xs = values.at({row.algorithm, row.k});
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size() - 1);
    EXPECT_NEAR(row.mean_value, mean, 1e-9);
    EXPECT_NEAR(row.std_value, std::sqrt(var), 1e-9);
    EXPECT_EQ(row.runs, xs.size());
    if (row.algorithm == "standard_greedy") greedy_mean[row.k] = mean;
  }
  for (const auto& row : report.summary) {
    ASSERT_TRUE(row.normalized_value.has_value());
    EXPECT_NEAR(*row.normalized_value, row.mean_value / greedy_mean[row.k],
                1e-9);
  }
}

TEST(Experiment, RecordedOutputsReevaluate) {
  const auto c = Parse(
      "instance = er\nn = 40\np = 0.15\nk = 5\n"
      "algorithms = random_greedy,fastls_guided_rg,determ\neps = 0.5\n"
      "ell = 2\ntrials = 3\n");
  const auto report = RunExperiment(c);
  for (const auto& t : report.trials) {
    ASSERT_TRUE(t.error.empty()) << t.error;
    const auto g = GenerateGraph(GraphModel::kErdosRenyi, c.graph,
                                 t.record.seed);
    EXPECT_NEAR(g.Evaluate(t.solution.span()), t.record.value, 1e-9);
    EXPECT_LE(t.solution.size(), 5u);
  }
}

TEST(Experiment, PartitionConstraint) {
  const auto c = Parse(
      "instance = er\nn = 20\np = 0.3\nconstraint = partition\nblocks = 4\n"
      "capacity = 1\nalgorithms = random_greedy,fastls_guided_rg\n"
      "trials = 3\n");
  const auto report = RunExperiment(c);
  ASSERT_EQ(report.trials.size(), 6u);
  const auto m = PartitionMatroid::Contiguous(20, 4, 1);
  for (const auto& t : report.trials) {
    EXPECT_TRUE(t.error.empty()) << t.error;
    EXPECT_EQ(t.record.k, 4u);
    EXPECT_TRUE(m.IsIndependent(t.solution.span()));
  }
}

TEST(Experiment, FailedTrialsAreRecorded) {
  const auto c = Parse(
      "instance = modular\nweights = 1,2\nk = 5\n"
      "algorithms = standard_greedy\n");
  const auto report = RunExperiment(c);
  EXPECT_EQ(report.failed_trials, 1u);
  EXPECT_TRUE(std::isnan(report.trials[0].record.value));
}

TEST(Experiment, OutputsReproducible) {
  const auto dir = std::filesystem::temp_directory_path() / "submod_bench_test";
  std::filesystem::create_directories(dir);
  const std::string text =
      "instance = ws\nn = 30\np = 0.1\ndegree = 4\nk = 3,6\n"
      "algorithms = standard_greedy,fastls_guided_rg\ntrials = 4\n"
      "threads = 3\nmaster_seed = 17\n";
  std::string csv[2];
  for (int run = 0; run < 2; ++run) {
    auto c = Parse(text);
    c.output = (dir / ("run" + std::to_string(run))).string();
    WriteExperimentOutputs(c, RunExperiment(c));
    csv[run] = WithoutWallTime(ReadFile(c.output + ".csv"));
    const std::string config = ReadFile(c.output + ".config");
    EXPECT_EQ(config.rfind("# generator = ", 0), 0u);
    EXPECT_TRUE(std::filesystem::exists(c.output + "_summary.csv"));
  }
  EXPECT_EQ(csv[0], csv[1]);
  EXPECT_EQ(csv[0].substr(0, csv[0].find('\n')),
            "algorithm,n,k,eps,t,seed,value,value_queries,"
            "independence_calls");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace submod
