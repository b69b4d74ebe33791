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

#ifndef SUBMOD_EXPERIMENT_H_
#define SUBMOD_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "submod/element_set.h"
#include "submod/graph_gen.h"
#include "submod/matroid.h"
#include "submod/objectives.h"
#include "submod/pipelines.h"
#include "submod/trial_record.h"

namespace submod {

// Everything needed to reproduce an experiment grid.
//
// Flat key/value format, one "key = value" per line; '#' starts a comment:
//
//   instance     er | ba | ws | edges | gram | features | modular
//   n, p, m, degree          generator parameters
//   path                     input file for edges / gram / features
//   weights                  comma list for modular
//   instance_seed            fixed generator seed; when absent every trial
//                            generates its own instance from the trial seed
//   constraint   size | partition
//   partition_file           partition matroid file, or
//   blocks, capacity         contiguous partition blocks
//   k                        comma list of budgets (size constraint)
//   algorithms               comma list, see RunAlgorithm
//   eps, t, ell, ell1, ell2, pool_cap
//   trials, master_seed, threads
//   output                   prefix: <output>.csv, <output>_summary.csv
//
// A JSON object with the same keys (lists as arrays) is accepted as well.
struct ExperimentConfig {
  std::string instance = "er";
  GraphParams graph;
  std::string path;
  std::vector<double> weights;
  std::optional<std::uint64_t> instance_seed;

  std::string constraint = "size";
  std::string partition_file;
  std::size_t blocks = 0;
  std::size_t capacity = 0;
  std::vector<std::size_t> ks;

  std::vector<std::string> algorithms;
  PipelineParams params;
  // Unset: per-algorithm default switch time.
  std::optional<double> t;

  std::size_t trials = 1;
  std::uint64_t master_seed = 1;
  std::size_t threads = 1;
  std::string output;
};

ExperimentConfig ParseConfig(std::istream& in);
ExperimentConfig ParseConfigJson(std::istream& in);
// JSON when the first non-blank character is '{', key/value otherwise.
ExperimentConfig LoadConfigFile(const std::string& path);
// Canonical key/value serialization; ParseConfig(SerializeConfig(c))
// reproduces c.
std::string SerializeConfig(const ExperimentConfig& config);

// Algorithm ids accepted by RunAlgorithm.
const std::vector<std::string>& KnownAlgorithms();

// A constraint for one run: a size budget, or a matroid whose rank is the
// budget.
struct ConstraintSpec {
  std::size_t k = 0;
  std::shared_ptr<const Matroid> matroid;
};

struct TrialResult {
  TrialRecord record;
  ElementSet solution;
  std::string error;
};

// Runs one algorithm with a fresh counting oracle and matroid view:
//   standard_greedy, random_greedy, fastls, fastls_two_pass,
//   fastls_guided_rg, determ_random, determ, nearly_linear.
// `t` defaults per algorithm when unset.
TrialResult RunAlgorithm(const std::string& algorithm,
                         const std::shared_ptr<const Objective>& objective,
                         const ConstraintSpec& constraint,
                         const PipelineParams& params, std::optional<double> t,
                         std::uint64_t seed);

struct SummaryRow {
  std::string algorithm;
  std::size_t k = 0;
  std::size_t runs = 0;
  double mean_value = 0.0;
  double std_value = 0.0;
  double mean_queries = 0.0;
  double std_queries = 0.0;
  // Means divided by the standard_greedy means at the same k; nullopt when
  // standard_greedy is not part of the grid.
  std::optional<double> normalized_value;
  std::optional<double> normalized_queries;
};

struct ExperimentReport {
  std::vector<TrialResult> trials;
  std::vector<SummaryRow> summary;
  std::size_t failed_trials = 0;
};

// Executes the grid (k x algorithm x trial) over a pool of
// config.threads workers. Trial j uses seed DeriveSeed(master_seed, j) for
// both instance generation and the algorithm. Rows are ordered by
// (k, algorithm as listed, trial).
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Per-(algorithm, k) mean and sample standard deviation (n - 1 divisor;
// 0 for a single run). Failed trials are skipped.
std::vector<SummaryRow> Summarize(const std::vector<TrialResult>& trials);

// Header: algorithm,n,k,eps,t,seed,value,value_queries,independence_calls,
// wall_ms. Failed trials are written with value "nan".
void WriteTrialsCsv(std::ostream& out, const std::vector<TrialResult>& trials);
// Header: algorithm,k,runs,mean_value,std_value,mean_queries,std_queries,
// normalized_value,normalized_queries
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);

// Writes <output>.csv, <output>_summary.csv and <output>.config.
void WriteExperimentOutputs(const ExperimentConfig& config,
                            const ExperimentReport& report);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENT_H_
