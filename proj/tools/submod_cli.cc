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

// Command-line front end: graph generation, brute-force optima, experiment
// grids and the acceptance suites.
//
// Exit codes: 0 success, 1 a certify suite failed, 2 input error (including
// an unknown subcommand), 3 resource limit exceeded.

#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submod/brute_force.h"
#include "submod/certify.h"
#include "submod/errors.h"
#include "submod/experiment.h"
#include "submod/graph_gen.h"
#include "submod/instance_io.h"
#include "submod/matroid.h"
#include "submod/objectives.h"
#include "submod/oracle.h"

namespace {

constexpr int kOk = 0;
constexpr int kCertifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct GenGraphArgs {
  std::string model;
  submod::GraphParams params;
  std::uint64_t seed = 1;
  std::string output;
};

struct OptArgs {
  std::string graph;
  std::string gram;
  std::string features;
  std::vector<double> modular;
  std::size_t k = 0;
  std::string partition;
  std::uint64_t limit = submod::kDefaultEnumerationLimit;
};

struct RunArgs {
  std::string config;
  std::string output;
};

struct CertifyArgs {
  std::vector<int> only;
  bool quick = false;
  std::uint64_t seed = submod::CertifyOptions{}.seed;
  bool verbose = false;
};

int GenGraph(const GenGraphArgs& a) {
  const submod::GraphModel model = submod::ParseGraphModel(a.model);
  const submod::MaxCutInstance g =
      submod::GenerateGraph(model, a.params, a.seed);
  if (a.output.empty() || a.output == "-") {
    submod::WriteEdgeList(std::cout, g);
  } else {
    submod::WriteEdgeListFile(a.output, g);
  }
  std::cerr << submod::GeneratorId(model) << ": n=" << g.size()
            << " edges=" << g.edges().size() << " seed=" << a.seed << '\n';
  return kOk;
}

int Opt(const OptArgs& a) {
  std::shared_ptr<const submod::Objective> f;
  const int sources = !a.graph.empty() + !a.gram.empty() +
                      !a.features.empty() + !a.modular.empty();
  if (sources != 1) {
    throw submod::InputError(
        "give exactly one of --graph, --gram, --features, --modular");
  }
  if (!a.graph.empty()) {
    f = std::make_shared<submod::MaxCutInstance>(
        submod::ReadEdgeListFile(a.graph));
  } else if (!a.gram.empty()) {
    f = std::make_shared<submod::GramInstance>(
        submod::ReadGramCsvFile(a.gram));
  } else if (!a.features.empty()) {
    f = std::make_shared<submod::GramInstance>(
        submod::ReadFeatureCsvFile(a.features));
  } else {
    f = std::make_shared<submod::ModularInstance>(a.modular);
  }

  submod::BruteForceResult best;
  if (!a.partition.empty()) {
    auto m = std::make_shared<submod::PartitionMatroid>(
        submod::ReadPartitionMatroidFile(a.partition, f->size()));
    submod::CountedOracle oracle(f, m->rank());
    submod::ExtendedMatroid em(m);
    best = submod::BruteForceOpt(oracle, em, a.limit);
  } else {
    if (a.k == 0) throw submod::InputError("--k is required without --partition");
    submod::CountedOracle oracle(f, a.k);
    best = submod::BruteForceOpt(oracle, submod::SizeConstraint{a.k}, a.limit);
  }
  std::printf("%.17g\n", best.value);
  std::fprintf(stderr, "set %s (%llu sets examined)\n",
               best.set.ToString().c_str(),
               static_cast<unsigned long long>(best.sets_examined));
  return kOk;
}

int Run(const RunArgs& a) {
  submod::ExperimentConfig config = submod::LoadConfigFile(a.config);
  if (!a.output.empty()) config.output = a.output;
  const submod::ExperimentReport report = submod::RunExperiment(config);
  if (config.output.empty()) {
    submod::WriteTrialsCsv(std::cout, report.trials);
  } else {
    submod::WriteExperimentOutputs(config, report);
  }
  submod::WriteSummaryCsv(std::cerr, report.summary);
  if (report.failed_trials > 0) {
    for (const auto& t : report.trials) {
      if (!t.error.empty()) {
        std::cerr << "trial failed (" << t.record.algorithm << ", seed "
                  << t.record.seed << "): " << t.error << '\n';
        break;
      }
    }
    std::cerr << report.failed_trials << " trial(s) failed\n";
    return kInputError;
  }
  return kOk;
}

int Certify(const CertifyArgs& a) {
  submod::CertifyOptions options;
  options.quick = a.quick;
  options.seed = a.seed;
  if (a.verbose) options.log = &std::cerr;
  const std::vector<int> ids = a.only.empty() ? submod::AllCriteria() : a.only;
  bool all = true;
  for (int id : ids) {
    const submod::CriterionResult r = submod::RunCriterion(id, options);
    std::cout << submod::FormatResult(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kOk : kCertifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization toolkit"};
  app.require_subcommand(1);

  GenGraphArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-graph", "Generate a random graph edge list");
  gen_cmd->add_option("model", gen.model, "er, ba or ws")->required();
  gen_cmd->add_option("--n", gen.params.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.params.p,
                      "ER edge probability or WS rewiring probability");
  gen_cmd->add_option("--m", gen.params.m, "BA edges per new vertex");
  gen_cmd->add_option("--degree", gen.params.degree, "WS ring degree (even)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("-o,--output", gen.output,
                      "Edge-list file (default: stdout)");

  OptArgs opt;
  CLI::App* opt_cmd =
      app.add_subcommand("opt", "Exact optimum by exhaustive enumeration");
  opt_cmd->add_option("--graph", opt.graph, "Edge-list file (max cut)");
  opt_cmd->add_option("--gram", opt.gram, "Gram matrix CSV (log-det)");
  opt_cmd->add_option("--features", opt.features,
                      "Feature CSV; Gram matrix of inner products");
  opt_cmd->add_option("--modular", opt.modular, "Modular weights")
      ->delimiter(',');
  opt_cmd->add_option("--k", opt.k, "Size budget");
  opt_cmd->add_option("--partition", opt.partition,
                      "Partition matroid file (replaces --k)");
  opt_cmd->add_option("--limit", opt.limit,
                      "Maximum number of sets to enumerate");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment grid");
  run_cmd->add_option("--config", run.config,
                      "Key/value or JSON experiment config")
      ->required();
  run_cmd->add_option("-o,--output", run.output,
                      "Output prefix (overrides the config)");

  CertifyArgs cert;
  CLI::App* cert_cmd =
      app.add_subcommand("certify", "Run the acceptance property suites");
  cert_cmd->add_option("--only", cert.only, "Criterion ids (1-12)")
      ->delimiter(',');
  cert_cmd->add_flag("--quick", cert.quick, "Reduced instance counts");
  cert_cmd->add_option("--seed", cert.seed, "Master seed");
  cert_cmd->add_flag("-v,--verbose", cert.verbose, "Per-instance progress");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return GenGraph(gen);
    if (*opt_cmd) return Opt(opt);
    if (*run_cmd) return Run(run);
    if (*cert_cmd) return Certify(cert);
  } catch (const submod::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
