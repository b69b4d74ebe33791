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

#include "submod/local_search.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "submod/brute_force.h"
#include "submod/errors.h"

namespace submod {
namespace {

struct Scored {
  double score;
  ElementId id;
};

}  // namespace

LocalSearchResult FastLocalSearch(CountedOracle& oracle, ExtendedMatroid& m,
                                  const ElementSet& ground,
                                  const ElementSet& z0, double eps) {
  if (!(eps > 0.0)) throw InputError("local search needs eps > 0");
  const std::size_t n = m.num_real();
  const std::size_t k = m.rank();
  if (k == 0) throw InputError("local search needs rank >= 1");
  if (!ground.empty() && ground.members().back() >= n) {
    throw InputError("local search ground set must hold real ids only");
  }
  const ElementSet start = z0.RealPart(n);
  if (!m.Independent(start)) {
    throw InputError("initial set " + start.ToString() + " is not feasible");
  }

  ElementSet z = PadWithDummies(start, n, k);
  double fz = oracle.CachedValue(start);
  if (!(fz > 0.0)) {
    throw InputError("local search needs f(Z0) > 0");
  }

  LocalSearchResult result;
  std::vector<Scored> losses;
  std::vector<Scored> gains;
  while (true) {
    ++result.rounds;
    losses.clear();
    gains.clear();

    bool dummy_in_z = false;
    for (ElementId a : z) {
      if (m.is_dummy(a)) {
        // All dummies are interchangeable; the smallest one represents them.
        if (!dummy_in_z) losses.push_back({0.0, a});
        dummy_in_z = true;
        continue;
      }
      losses.push_back({fz - oracle.Value(z.Without(a)), a});
    }
    for (ElementId e : ground) {
      if (z.contains(e)) continue;
      gains.push_back({oracle.Gain(e, z, fz), e});
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto d = static_cast<ElementId>(n + i);
      if (!z.contains(d)) {
        gains.push_back({0.0, d});
        break;
      }
    }
    std::sort(losses.begin(), losses.end(), [](const Scored& l, const Scored& r) {
      return l.score != r.score ? l.score < r.score : l.id < r.id;
    });
    std::sort(gains.begin(), gains.end(), [](const Scored& l, const Scored& r) {
      return l.score != r.score ? l.score > r.score : l.id < r.id;
    });

    const double threshold = eps / static_cast<double>(k) * fz;
    bool found = false;
    double best_score = -std::numeric_limits<double>::infinity();
    ElementId best_a = 0;
    ElementId best_e = 0;
    const double min_loss = losses.empty() ? 0.0 : losses.front().score;
    for (const Scored& e : gains) {
      const double ceiling = e.score - min_loss;
      if (ceiling < threshold || (found && ceiling < best_score)) break;
      for (const Scored& a : losses) {
        const double score = e.score - a.score;
        if (score < threshold || (found && score < best_score)) break;
        bool independent = true;
        if (!m.is_dummy(e.id)) {
          ElementSet swapped = z.Without(a.id);
          swapped.insert(e.id);
          independent = m.Independent(swapped);
        }
        if (!independent) continue;
        if (!found || score > best_score ||
            (score == best_score &&
             std::make_pair(a.id, e.id) < std::make_pair(best_a, best_e))) {
          found = true;
          best_score = score;
          best_a = a.id;
          best_e = e.id;
        }
        // Later a's score no better and lose ties on id.
        break;
      }
    }
    if (!found) break;

    ElementSet next = z.Without(best_a);
    next.insert(best_e);
    const double f_next = oracle.Value(next);
    // Submodularity guarantees f_next - fz >= best_score > 0; a violation
    // here can only come from roundoff.
    if (!(f_next > fz)) break;
    result.swaps.push_back({best_a, best_e, fz, f_next});
    z = std::move(next);
    fz = f_next;
  }

  result.solution = z.RealPart(n);
  result.solution.set_cached_value(fz);
  return result;
}

ElementSet FastLocalSearchTwoPass(CountedOracle& oracle, ExtendedMatroid& m,
                                  const ElementSet& z0, double eps) {
  const std::size_t n = m.num_real();
  const ElementSet full = FullSet(n);
  ElementSet first = FastLocalSearch(oracle, m, full, z0, eps).solution;

  const ElementSet ground = Difference(full, first);
  ElementSet start = Difference(z0.RealPart(n), first);
  double start_value = start.empty() ? 0.0 : oracle.Value(start);
  if (!(start_value > 0.0)) {
    start = ElementSet();
    start_value = 0.0;
    for (ElementId x : ground) {
      ElementSet single{x};
      if (!m.Independent(single)) continue;
      const double v = oracle.Value(single);
      if (v > start_value) {
        start_value = v;
        start = single;
      }
    }
  }
  if (!(start_value > 0.0)) return first;
  start.set_cached_value(start_value);
  ElementSet second = FastLocalSearch(oracle, m, ground, start, eps).solution;
  return *second.cached_value() > *first.cached_value() ? second : first;
}

bool CertifyLocalOptimum(CountedOracle& oracle, ExtendedMatroid& m,
                         const ElementSet& z, double eps, double tolerance,
                         std::uint64_t max_sets) {
  const std::size_t n = m.num_real();
  if (n >= 63 || (std::uint64_t{1} << n) > max_sets) {
    throw ResourceError("certificate enumeration over 2^" + std::to_string(n) +
                        " sets exceeds budget");
  }
  const ElementSet zr = z.RealPart(n);
  const double fz = oracle.Value(zr);
  const double bound = (2.0 + eps) * fz + tolerance;
  bool ok = true;
  ForEachSubset(n, m.rank(), [&](const std::vector<ElementId>& members) {
    if (!ok) return;
    const ElementSet s(members);
    if (!m.Independent(s)) return;
    const double lhs =
        oracle.Value(Union(s, zr)) + oracle.Value(Intersection(s, zr));
    if (lhs > bound) ok = false;
  });
  return ok;
}

ElementSet Prune(CountedOracle& oracle, const ElementSet& a) {
  ElementSet current = a.RealPart(oracle.num_real());
  double value = oracle.CachedValue(current);
  const std::vector<ElementId> snapshot = current.members();
  for (ElementId x : snapshot) {
    ElementSet without = current.Without(x);
    const double without_value = oracle.Value(without);
    if (value - without_value < 0.0) {
      current = std::move(without);
      value = without_value;
    }
  }
  current.set_cached_value(value);
  return current;
}

GuidanceCertificate CheckGuidance(CountedOracle& oracle, const ElementSet& z,
                                  const ElementSet& opt, double alpha,
                                  double beta) {
  const std::size_t n = oracle.num_real();
  const ElementSet zr = z.RealPart(n);
  const ElementSet o = opt.RealPart(n);
  GuidanceCertificate cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.f_z = oracle.Value(zr);
  cert.f_opt = oracle.Value(o);
  cert.f_intersection = oracle.Value(Intersection(o, zr));
  cert.f_union = oracle.Value(Union(o, zr));
  return cert;
}

void WriteSwapLogCsv(std::ostream& out, const std::vector<SwapEvent>& swaps) {
  out << "step,removed,added,value\n";
  char buf[64];
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", swaps[i].value_after);
    out << (i + 1) << ',' << swaps[i].removed << ',' << swaps[i].added << ','
        << buf << '\n';
  }
}

}  // namespace submod
