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

#include "submod/greedy.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

struct Candidate {
  double gain;
  ElementId id;
};

bool ByGainThenId(const Candidate& l, const Candidate& r) {
  return l.gain != r.gain ? l.gain > r.gain : l.id < r.id;
}

void CheckRealIds(const ElementSet& s, std::size_t n, const char* what) {
  if (!s.empty() && s.members().back() >= n) {
    throw InputError(std::string(what) + " must hold real element ids");
  }
}

}  // namespace

SwitchSchedule::SwitchSchedule(double t, std::size_t k) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InputError("switch time must lie in [0, 1]");
  }
  boundary_ = static_cast<std::size_t>(std::floor(t * static_cast<double>(k)));
  boundary_ = std::min(boundary_, k);
}

ElementSet ReplayTrace(const RunTrace& trace, std::size_t num_real,
                       std::size_t k, bool matroid) {
  ElementSet a;
  if (matroid) a = PadWithDummies(ElementSet(), num_real, k);
  for (const TraceStep& step : trace.steps) {
    if (matroid) {
      a.erase(step.displaced);
      a.insert(step.picked);
    } else if (step.picked < num_real) {
      a.insert(step.picked);
    }
  }
  return a.RealPart(num_real);
}

void WriteTraceCsv(std::ostream& out, const RunTrace& trace) {
  out << "# seed=" << trace.seed << '\n';
  out << "iteration,picked,displaced\n";
  for (const TraceStep& s : trace.steps) {
    out << s.iteration << ',' << s.picked << ',' << s.displaced << '\n';
  }
}

RunTrace ReadTraceCsv(std::istream& in) {
  RunTrace trace;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# seed=", 0) == 0) {
      trace.seed = std::stoull(line.substr(7));
      continue;
    }
    if (!header) {
      if (line != "iteration,picked,displaced") {
        throw InputError("unexpected trace header: " + line);
      }
      header = true;
      continue;
    }
    std::istringstream fields(line);
    TraceStep step;
    char c1 = 0;
    char c2 = 0;
    if (!(fields >> step.iteration >> c1 >> step.picked >> c2 >>
          step.displaced) ||
        c1 != ',' || c2 != ',') {
      throw InputError("malformed trace row: " + line);
    }
    trace.steps.push_back(step);
  }
  if (!header) throw InputError("trace has no header");
  return trace;
}

ElementSet StandardGreedy(CountedOracle& oracle, std::size_t k) {
  const std::size_t n = oracle.num_real();
  ElementSet a;
  double value = oracle.Value(a);
  for (std::size_t round = 0; round < k; ++round) {
    bool found = false;
    Candidate best{0.0, 0};
    for (ElementId x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const double g = oracle.Gain(x, a, value);
      if (!found || g > best.gain) {
        best = {g, x};
        found = true;
      }
    }
    if (!found || best.gain <= 0.0) break;
    a.insert(best.id);
    value += best.gain;
  }
  a.set_cached_value(value);
  return a;
}

ElementSet MatroidGreedy(CountedOracle& oracle, ExtendedMatroid& m) {
  const std::size_t n = m.num_real();
  ElementSet a;
  double value = oracle.Value(a);
  std::vector<bool> blocked(n, false);
  for (std::size_t round = 0; round < m.rank(); ++round) {
    std::vector<Candidate> gains;
    for (ElementId x = 0; x < n; ++x) {
      if (a.contains(x) || blocked[x]) continue;
      gains.push_back({oracle.Gain(x, a, value), x});
    }
    std::sort(gains.begin(), gains.end(), ByGainThenId);
    bool added = false;
    for (const Candidate& c : gains) {
      if (c.gain <= 0.0) break;
      if (!m.Independent(a.With(c.id))) {
        // Once dependent, a superset stays dependent.
        blocked[c.id] = true;
        continue;
      }
      a.insert(c.id);
      value += c.gain;
      added = true;
      break;
    }
    if (!added) break;
  }
  a.set_cached_value(value);
  return a;
}

ElementSet GuidedRandomGreedy(CountedOracle& oracle, SizeConstraint size,
                              const ElementSet& guide, double t, Rng& rng,
                              RunTrace* trace) {
  const std::size_t n = oracle.num_real();
  const std::size_t k = size.k;
  if (k == 0) throw InputError("size budget must be at least 1");
  CheckRealIds(guide, n, "guidance set");
  if (guide.size() > k) {
    throw InputError("guidance set " + guide.ToString() + " exceeds budget");
  }
  const SwitchSchedule schedule(t, k);

  ElementSet a;
  double value = oracle.Value(a);
  std::vector<Candidate> pool;
  for (std::size_t i = 1; i <= k; ++i) {
    const bool guided = schedule.guided(i);
    pool.clear();
    for (ElementId x = 0; x < n; ++x) {
      if (a.contains(x) || (guided && guide.contains(x))) continue;
      pool.push_back({oracle.Gain(x, a, value), x});
    }
    for (std::size_t j = 0; j < k; ++j) {
      pool.push_back({0.0, static_cast<ElementId>(n + j)});
    }
    std::partial_sort(pool.begin(), pool.begin() + k, pool.end(),
                      ByGainThenId);
    pool.resize(k);
    std::sort(pool.begin(), pool.end(),
              [](const Candidate& l, const Candidate& r) {
                return l.id < r.id;
              });
    const Candidate pick = pool[UniformIndex(rng, k)];
    if (pick.id < n) {
      a.insert(pick.id);
      value += pick.gain;
    }
    if (trace) {
      trace->steps.push_back(
          {i, pick.id, static_cast<ElementId>(n + i - 1)});
    }
  }
  a.set_cached_value(value);
  return a;
}

ElementSet GuidedRandomGreedy(CountedOracle& oracle, ExtendedMatroid& m,
                              const ElementSet& guide, double t, Rng& rng,
                              RunTrace* trace) {
  const std::size_t n = m.num_real();
  const std::size_t k = m.rank();
  if (k == 0) throw InputError("matroid rank must be at least 1");
  CheckRealIds(guide, n, "guidance set");
  if (!m.Independent(guide)) {
    throw InputError("guidance set " + guide.ToString() +
                     " is not independent");
  }
  const SwitchSchedule schedule(t, k);
  const ElementSet none;

  ElementSet a = PadWithDummies(none, n, k);
  a.set_cached_value(oracle.Value(a));
  for (std::size_t i = 1; i <= k; ++i) {
    const ElementSet& excluded = schedule.guided(i) ? guide : none;
    const ElementSet basis = MaxGainBasis(oracle, m, a, excluded);
    // A short basis can only occur when reals run out; an injection into A
    // still exists because `basis` is independent and disjoint from A.
    const ExchangeMap sigma = basis.size() == k
                                  ? ExchangeBijection(m, basis, a)
                                  : ExchangeInjection(m, basis, a);
    const ElementId x = basis[UniformIndex(rng, basis.size())];
    const ElementId y = sigma.at(x);
    const double before = *a.cached_value();
    a.erase(y);
    a.insert(x);
    if (m.is_dummy(x) && m.is_dummy(y)) {
      a.set_cached_value(before);
    } else {
      a.set_cached_value(oracle.Value(a));
    }
    if (trace) trace->steps.push_back({i, x, y});
  }
  const double value = *a.cached_value();
  ElementSet out = a.RealPart(n);
  out.set_cached_value(value);
  return out;
}

ElementSet RandomGreedy(CountedOracle& oracle, SizeConstraint size, Rng& rng,
                        RunTrace* trace) {
  return GuidedRandomGreedy(oracle, size, ElementSet(), 0.0, rng, trace);
}

ElementSet RandomGreedy(CountedOracle& oracle, ExtendedMatroid& m, Rng& rng,
                        RunTrace* trace) {
  return GuidedRandomGreedy(oracle, m, ElementSet(), 0.0, rng, trace);
}

}  // namespace submod
