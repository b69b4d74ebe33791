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

#include "submod/experiment.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "submod/errors.h"
#include "submod/greedy.h"
#include "submod/instance_io.h"
#include "submod/local_search.h"
#include "submod/oracle.h"
#include "submod/random.h"

namespace submod {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t ToUnsigned(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
    const unsigned long long x = std::stoull(v, &used, 0);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw InputError("config key '" + key + "': bad integer '" + v + "'");
  }
}

double ToDouble(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw InputError("config key '" + key + "': bad number '" + v + "'");
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Apply(ExperimentConfig& c, const std::string& key,
           const std::string& value) {
  auto size = [&] { return static_cast<std::size_t>(ToUnsigned(key, value)); };
  if (key == "instance") {
    c.instance = value;
  } else if (key == "n") {
    c.graph.n = size();
  } else if (key == "p") {
    c.graph.p = ToDouble(key, value);
  } else if (key == "m") {
    c.graph.m = size();
  } else if (key == "degree") {
    c.graph.degree = size();
  } else if (key == "path") {
    c.path = value;
  } else if (key == "weights") {
    c.weights.clear();
    for (const auto& w : SplitList(value)) c.weights.push_back(ToDouble(key, w));
  } else if (key == "instance_seed") {
    c.instance_seed = ToUnsigned(key, value);
  } else if (key == "constraint") {
    c.constraint = value;
  } else if (key == "partition_file") {
    c.partition_file = value;
  } else if (key == "blocks") {
    c.blocks = size();
  } else if (key == "capacity") {
    c.capacity = size();
  } else if (key == "k") {
    c.ks.clear();
    for (const auto& k : SplitList(value)) {
      c.ks.push_back(static_cast<std::size_t>(ToUnsigned(key, k)));
    }
  } else if (key == "algorithms") {
    c.algorithms = SplitList(value);
  } else if (key == "eps") {
    c.params.eps = ToDouble(key, value);
  } else if (key == "t") {
    c.t = ToDouble(key, value);
  } else if (key == "ell") {
    c.params.ell = size();
  } else if (key == "ell1") {
    c.params.ell1 = size();
  } else if (key == "ell2") {
    c.params.ell2 = size();
  } else if (key == "pool_cap") {
    c.params.pool_cap = size();
  } else if (key == "max_level_size") {
    c.params.max_level_size = size();
  } else if (key == "trials") {
    c.trials = size();
  } else if (key == "master_seed") {
    c.master_seed = ToUnsigned(key, value);
  } else if (key == "threads") {
    c.threads = size();
  } else if (key == "output") {
    c.output = value;
  } else {
    throw InputError("unknown config key '" + key + "'");
  }
}

void Validate(const ExperimentConfig& c) {
  static const std::vector<std::string> kInstances = {
      "er", "ba", "ws", "edges", "gram", "features", "modular"};
  if (std::find(kInstances.begin(), kInstances.end(), c.instance) ==
      kInstances.end()) {
    throw InputError("unknown instance kind '" + c.instance + "'");
  }
  if (c.constraint != "size" && c.constraint != "partition") {
    throw InputError("constraint must be 'size' or 'partition'");
  }
  if (c.constraint == "size" && c.ks.empty()) {
    throw InputError("size constraint needs k");
  }
  if (c.algorithms.empty()) throw InputError("no algorithms listed");
  for (const auto& a : c.algorithms) {
    const auto& known = KnownAlgorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw InputError("unknown algorithm '" + a + "'");
    }
  }
  if (c.trials == 0) throw InputError("trials must be at least 1");
}

std::shared_ptr<const Objective> BuildObjective(const ExperimentConfig& c,
                                                std::uint64_t seed) {
  if (c.instance == "er" || c.instance == "ba" || c.instance == "ws") {
    return std::make_shared<MaxCutInstance>(GenerateGraph(
        ParseGraphModel(c.instance), c.graph, c.instance_seed.value_or(seed)));
  }
  if (c.instance == "edges") {
    return std::make_shared<MaxCutInstance>(ReadEdgeListFile(c.path));
  }
  if (c.instance == "gram") {
    return std::make_shared<GramInstance>(ReadGramCsvFile(c.path));
  }
  if (c.instance == "features") {
    return std::make_shared<GramInstance>(ReadFeatureCsvFile(c.path));
  }
  return std::make_shared<ModularInstance>(c.weights);
}

std::vector<ConstraintSpec> BuildConstraints(const ExperimentConfig& c,
                                             std::size_t n) {
  std::vector<ConstraintSpec> out;
  if (c.constraint == "size") {
    for (std::size_t k : c.ks) out.push_back({k, nullptr});
    return out;
  }
  std::shared_ptr<const PartitionMatroid> m;
  if (!c.partition_file.empty()) {
    m = std::make_shared<PartitionMatroid>(
        ReadPartitionMatroidFile(c.partition_file, n));
  } else {
    if (c.blocks == 0) {
      throw InputError("partition constraint needs partition_file or blocks");
    }
    m = std::make_shared<PartitionMatroid>(
        PartitionMatroid::Contiguous(n, c.blocks, c.capacity));
  }
  out.push_back({m->rank(), m});
  return out;
}

double DefaultSwitchTime(const std::string& algorithm, bool matroid) {
  if (algorithm == "nearly_linear") return kNearlyLinearSwitchTime;
  return matroid ? kMatroidSwitchTime : kSizeSwitchTime;
}

}  // namespace

ExperimentConfig ParseConfig(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = Trim(line.substr(0, line.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    Apply(c, Trim(s.substr(0, eq)), Trim(s.substr(eq + 1)));
  }
  Validate(c);
  return c;
}

ExperimentConfig ParseConfigJson(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("JSON config must be an object");
  ExperimentConfig c;
  auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return FormatDouble(v.get<double>());
    if (v.is_number() || v.is_boolean()) return v.dump();
    throw InputError("unsupported JSON value " + v.dump());
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += scalar(item);
      }
      Apply(c, key, joined);
    } else {
      Apply(c, key, scalar(value));
    }
  }
  Validate(c);
  return c;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  in.clear();
  in.seekg(0);
  return first == '{' ? ParseConfigJson(in) : ParseConfig(in);
}

std::string SerializeConfig(const ExperimentConfig& c) {
  std::ostringstream out;
  auto join = [](const auto& items, auto fmt) {
    std::string s;
    for (const auto& x : items) {
      if (!s.empty()) s += ',';
      s += fmt(x);
    }
    return s;
  };
  out << "instance = " << c.instance << '\n';
  out << "n = " << c.graph.n << '\n';
  out << "p = " << FormatDouble(c.graph.p) << '\n';
  out << "m = " << c.graph.m << '\n';
  out << "degree = " << c.graph.degree << '\n';
  if (!c.path.empty()) out << "path = " << c.path << '\n';
  if (!c.weights.empty()) {
    out << "weights = " << join(c.weights, FormatDouble) << '\n';
  }
  if (c.instance_seed) out << "instance_seed = " << *c.instance_seed << '\n';
  out << "constraint = " << c.constraint << '\n';
  if (!c.partition_file.empty()) {
    out << "partition_file = " << c.partition_file << '\n';
  }
  out << "blocks = " << c.blocks << '\n';
  out << "capacity = " << c.capacity << '\n';
  if (!c.ks.empty()) {
    out << "k = "
        << join(c.ks, [](std::size_t k) { return std::to_string(k); })
        << '\n';
  }
  out << "algorithms = "
      << join(c.algorithms, [](const std::string& a) { return a; }) << '\n';
  out << "eps = " << FormatDouble(c.params.eps) << '\n';
  if (c.t) out << "t = " << FormatDouble(*c.t) << '\n';
  out << "ell = " << c.params.ell << '\n';
  out << "ell1 = " << c.params.ell1 << '\n';
  out << "ell2 = " << c.params.ell2 << '\n';
  out << "pool_cap = " << c.params.pool_cap << '\n';
  out << "max_level_size = " << c.params.max_level_size << '\n';
  out << "trials = " << c.trials << '\n';
  out << "master_seed = " << c.master_seed << '\n';
  out << "threads = " << c.threads << '\n';
  if (!c.output.empty()) out << "output = " << c.output << '\n';
  return out.str();
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAlgorithms = {
      "standard_greedy", "random_greedy", "fastls",
      "fastls_two_pass", "fastls_guided_rg", "determ_random",
      "determ",          "nearly_linear"};
  return kAlgorithms;
}

TrialResult RunAlgorithm(const std::string& algorithm,
                         const std::shared_ptr<const Objective>& objective,
                         const ConstraintSpec& constraint,
                         const PipelineParams& params, std::optional<double> t,
                         std::uint64_t seed) {
  const std::size_t n = objective->size();
  const bool matroid = constraint.matroid != nullptr;
  if (matroid && constraint.matroid->ground_size() != n) {
    throw InputError("matroid ground set does not match the instance");
  }
  const std::size_t k = matroid ? constraint.matroid->rank() : constraint.k;
  if (k == 0) throw InputError("budget must be at least 1");
  if (!matroid && k > n) {
    throw InputError("k = " + std::to_string(k) + " exceeds n = " +
                     std::to_string(n));
  }
  CountedOracle oracle(objective, k);
  ExtendedMatroid m(matroid ? constraint.matroid
                            : std::make_shared<UniformMatroid>(n, k));
  const SizeConstraint size{k};
  PipelineParams p = params;
  p.t = t.value_or(DefaultSwitchTime(algorithm, matroid));

  const auto start = std::chrono::steady_clock::now();
  TrialResult result;
  TrialRecord& r = result.record;
  r.certified = true;
  ElementSet out;
  if (algorithm == "standard_greedy") {
    out = matroid ? MatroidGreedy(oracle, m) : StandardGreedy(oracle, k);
  } else if (algorithm == "random_greedy") {
    Rng rng(seed);
    out = matroid ? RandomGreedy(oracle, m, rng)
                  : RandomGreedy(oracle, size, rng);
  } else if (algorithm == "fastls" || algorithm == "fastls_two_pass") {
    ElementSet z0 = matroid ? MatroidGreedy(oracle, m)
                            : StandardGreedy(oracle, k);
    if (!(*z0.cached_value() > 0.0)) {
      out = z0;
    } else if (algorithm == "fastls") {
      out = FastLocalSearch(oracle, m, FullSet(n), z0, p.eps).solution;
    } else {
      out = FastLocalSearchTwoPass(oracle, m, z0, p.eps);
    }
  } else {
    PipelineResult pr;
    if (algorithm == "fastls_guided_rg") {
      pr = matroid ? RunRandomized(oracle, m, p, seed)
                   : RunRandomized(oracle, size, p, seed);
    } else if (algorithm == "determ_random") {
      pr = matroid ? RunDetermRandom(oracle, m, p, seed)
                   : RunDetermRandom(oracle, size, p, seed);
    } else if (algorithm == "determ") {
      pr = matroid ? RunDeterm(oracle, m, p) : RunDeterm(oracle, size, p);
    } else if (algorithm == "nearly_linear") {
      if (matroid) {
        throw InputError("nearly_linear supports size constraints only");
      }
      pr = RunNearlyLinear(oracle, size, p);
    } else {
      throw InputError("unknown algorithm '" + algorithm + "'");
    }
    out = pr.solution;
    r.certified = pr.record.certified;
  }
  r.algorithm = algorithm;
  r.n = n;
  r.k = k;
  r.eps = p.eps;
  r.t = p.t;
  r.seed = seed;
  r.value = oracle.CachedValue(out);
  r.value_queries = oracle.value_queries();
  r.independence_calls = m.independence_calls();
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  result.solution = out.RealPart(n);
  result.solution.set_cached_value(r.value);
  return result;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  Validate(config);
  struct Task {
    std::size_t k_index;
    std::size_t algorithm_index;
    std::size_t trial;
  };

  // Instances are built once per distinct seed, before any worker starts.
  std::map<std::uint64_t, std::shared_ptr<const Objective>> objectives;
  std::map<std::uint64_t, std::string> build_errors;
  std::vector<ConstraintSpec> constraints;
  std::string constraint_error;
  std::size_t n = 0;
  for (std::size_t j = 0; j < config.trials; ++j) {
    const std::uint64_t seed = DeriveSeed(config.master_seed, j);
    const std::uint64_t key = config.instance_seed ? 0 : seed;
    if (objectives.count(key) || build_errors.count(key)) continue;
    try {
      objectives[key] = BuildObjective(config, seed);
      n = objectives[key]->size();
    } catch (const std::exception& e) {
      build_errors[key] = e.what();
    }
  }
  try {
    if (!objectives.empty()) constraints = BuildConstraints(config, n);
  } catch (const std::exception& e) {
    constraint_error = e.what();
  }
  const std::size_t num_constraints =
      config.constraint == "size" ? config.ks.size() : 1;

  std::vector<Task> tasks;
  for (std::size_t ki = 0; ki < num_constraints; ++ki) {
    for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
      for (std::size_t j = 0; j < config.trials; ++j) {
        tasks.push_back({ki, ai, j});
      }
    }
  }

  ExperimentReport report;
  report.trials.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      const std::string& algorithm = config.algorithms[task.algorithm_index];
      const std::uint64_t seed = DeriveSeed(config.master_seed, task.trial);
      const std::uint64_t key = config.instance_seed ? 0 : seed;
      TrialResult& out = report.trials[i];
      out.record.algorithm = algorithm;
      out.record.seed = seed;
      out.record.eps = config.params.eps;
      if (config.constraint == "size") out.record.k = config.ks[task.k_index];
      try {
        if (build_errors.count(key)) throw InputError(build_errors.at(key));
        if (!constraint_error.empty()) throw InputError(constraint_error);
        out = RunAlgorithm(algorithm, objectives.at(key),
                           constraints[task.k_index], config.params, config.t,
                           seed);
      } catch (const std::exception& e) {
        out.error = e.what();
        out.record.value = std::nan("");
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(config.threads, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& t : report.trials) {
    if (!t.error.empty()) ++report.failed_trials;
  }
  report.summary = Summarize(report.trials);
  return report;
}

std::vector<SummaryRow> Summarize(const std::vector<TrialResult>& trials) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<const TrialRecord*>> members;
  for (const TrialResult& t : trials) {
    if (!t.error.empty()) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
      return r.algorithm == t.record.algorithm && r.k == t.record.k;
    });
    if (it == rows.end()) {
      rows.push_back({});
      rows.back().algorithm = t.record.algorithm;
      rows.back().k = t.record.k;
      members.emplace_back();
      it = rows.end() - 1;
    }
    members[static_cast<std::size_t>(it - rows.begin())].push_back(&t.record);
  }
  auto stats = [](const std::vector<double>& xs, double& mean, double& sd) {
    mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    sd = 0.0;
    if (xs.size() > 1) {
      for (double x : xs) sd += (x - mean) * (x - mean);
      sd = std::sqrt(sd / static_cast<double>(xs.size() - 1));
    }
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> values;
    std::vector<double> queries;
    for (const TrialRecord* r : members[i]) {
      values.push_back(r->value);
      queries.push_back(static_cast<double>(r->value_queries));
    }
    rows[i].runs = values.size();
    stats(values, rows[i].mean_value, rows[i].std_value);
    stats(queries, rows[i].mean_queries, rows[i].std_queries);
  }
  for (SummaryRow& row : rows) {
    for (const SummaryRow& base : rows) {
      if (base.algorithm != "standard_greedy" || base.k != row.k) continue;
      if (base.mean_value != 0.0) {
        row.normalized_value = row.mean_value / base.mean_value;
      }
      if (base.mean_queries != 0.0) {
        row.normalized_queries = row.mean_queries / base.mean_queries;
      }
    }
  }
  return rows;
}

void WriteTrialsCsv(std::ostream& out, const std::vector<TrialResult>& trials) {
  out << "algorithm,n,k,eps,t,seed,value,value_queries,independence_calls,"
         "wall_ms\n";
  char wall[32];
  for (const TrialResult& t : trials) {
    const TrialRecord& r = t.record;
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
    out << r.algorithm << ',' << r.n << ',' << r.k << ','
        << FormatDouble(r.eps) << ',' << FormatDouble(r.t) << ',' << r.seed
        << ',' << (t.error.empty() ? FormatDouble(r.value) : "nan") << ','
        << r.value_queries << ',' << r.independence_calls << ',' << wall
        << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "algorithm,k,runs,mean_value,std_value,mean_queries,std_queries,"
         "normalized_value,normalized_queries\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string();
  };
  for (const SummaryRow& r : rows) {
    out << r.algorithm << ',' << r.k << ',' << r.runs << ','
        << FormatDouble(r.mean_value) << ',' << FormatDouble(r.std_value)
        << ',' << FormatDouble(r.mean_queries) << ','
        << FormatDouble(r.std_queries) << ',' << opt(r.normalized_value)
        << ',' << opt(r.normalized_queries) << '\n';
  }
}

void WriteExperimentOutputs(const ExperimentConfig& config,
                            const ExperimentReport& report) {
  if (config.output.empty()) throw InputError("config has no output prefix");
  auto write = [](const std::string& path, auto&& body) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    body(out);
    if (!out) throw InputError("write to " + path + " failed");
  };
  write(config.output + ".csv",
        [&](std::ostream& o) { WriteTrialsCsv(o, report.trials); });
  write(config.output + "_summary.csv",
        [&](std::ostream& o) { WriteSummaryCsv(o, report.summary); });
  write(config.output + ".config", [&](std::ostream& o) {
    if (config.instance == "er" || config.instance == "ba" ||
        config.instance == "ws") {
      o << "# generator = " << GeneratorId(ParseGraphModel(config.instance))
        << '\n';
    }
    o << SerializeConfig(config);
  });
}

}  // namespace submod
