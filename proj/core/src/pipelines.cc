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

#include "submod/pipelines.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "submod/errors.h"
#include "submod/greedy.h"
#include "submod/interlace.h"
#include "submod/local_search.h"

namespace submod {
namespace {

std::size_t CeilRounds(double x) {
  // Absorbs roundoff such as 10 / (9 * (10 / 27)) = 3.0000000000000004.
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

void CheckEps(double eps) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
}

// Tracks queries, independence calls and wall time for one pipeline run.
class RunMeter {
 public:
  RunMeter(CountedOracle& oracle, const ExtendedMatroid* m)
      : oracle_(oracle),
        m_(m),
        queries_(oracle.value_queries()),
        calls_(m ? m->independence_calls() : 0),
        start_(std::chrono::steady_clock::now()) {}

  void Fill(TrialRecord& r) const {
    r.value_queries = oracle_.value_queries() - queries_;
    r.independence_calls = m_ ? m_->independence_calls() - calls_ : 0;
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
  }

 private:
  CountedOracle& oracle_;
  const ExtendedMatroid* m_;
  std::uint64_t queries_;
  std::uint64_t calls_;
  std::chrono::steady_clock::time_point start_;
};

ElementSet WithValue(CountedOracle& oracle, ElementSet s) {
  const double v = oracle.CachedValue(s);
  s.set_cached_value(v);
  return s;
}

// Strips dummies and keeps the cached value.
ElementSet Real(const ElementSet& s, std::size_t n) {
  ElementSet out = s.RealPart(n);
  if (s.cached_value()) out.set_cached_value(*s.cached_value());
  return out;
}

// FastLS from z0; skipped when f(z0) <= 0, where its threshold degenerates.
ElementSet LocalOptimum(CountedOracle& oracle, ExtendedMatroid& m,
                        const ElementSet& z0, double eps) {
  ElementSet start = WithValue(oracle, z0.RealPart(m.num_real()));
  if (!(*start.cached_value() > 0.0)) return start;
  return FastLocalSearch(oracle, m, FullSet(m.num_real()), start, eps)
      .solution;
}

ExtendedMatroid SizeMatroid(std::size_t n, std::size_t k) {
  if (k == 0) throw InputError("size budget must be at least 1");
  return ExtendedMatroid(std::make_shared<UniformMatroid>(n, std::min(n, k)));
}

void FinishRecord(PipelineResult& result, const char* algorithm,
                  std::size_t n, std::size_t k, const PipelineParams& params,
                  double t, std::uint64_t seed, const RunMeter& meter) {
  TrialRecord& r = result.record;
  r.algorithm = algorithm;
  r.n = n;
  r.k = k;
  r.eps = params.eps;
  r.t = t;
  r.seed = seed;
  r.value = *result.solution.cached_value();
  meter.Fill(r);
}

// Ties keep the incumbent.
void KeepBest(ElementSet& best, const ElementSet& candidate) {
  if (*candidate.cached_value() > *best.cached_value()) best = candidate;
}

void Dedupe(std::vector<ElementSet>& level) {
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
}

// Applies the level cap and size limit. Returns false when sets were dropped.
bool TrimLevel(std::vector<ElementSet>& level, const PipelineParams& params) {
  bool exact = true;
  if (params.pool_cap > 0 && level.size() > params.pool_cap) {
    std::stable_sort(level.begin(), level.end(),
                     [](const ElementSet& l, const ElementSet& r) {
                       return *l.cached_value() > *r.cached_value();
                     });
    level.resize(params.pool_cap);
    std::sort(level.begin(), level.end());
    exact = false;
  }
  if (level.size() > params.max_level_size) {
    throw ResourceError("enumeration level holds " +
                        std::to_string(level.size()) + " sets, limit " +
                        std::to_string(params.max_level_size));
  }
  return exact;
}

std::size_t ResolveEll(const PipelineParams& params, std::size_t k) {
  CheckEps(params.eps);
  const std::size_t ell =
      params.ell > 0 ? params.ell : InterpolationRounds(params.eps);
  if (ell > k) {
    throw InputError("k = " + std::to_string(k) + " is below ell = " +
                     std::to_string(ell));
  }
  return ell;
}

std::size_t GuidedRounds(double t, std::size_t ell) {
  return SwitchSchedule(t, ell).boundary();
}

}  // namespace

std::size_t InterpolationRounds(double eps) {
  CheckEps(eps);
  return CeilRounds(10.0 / (9.0 * eps));
}

std::size_t GuidanceSearchRounds(double eps) {
  CheckEps(eps);
  return CeilRounds(10.0 / (3.0 * eps));
}

std::size_t GuidedPhaseRounds(double eps) {
  CheckEps(eps);
  return CeilRounds(5.0 / eps);
}

PipelineResult RunRandomized(CountedOracle& oracle, SizeConstraint size,
                             const PipelineParams& params, std::uint64_t seed,
                             const std::optional<ElementSet>& z0) {
  CheckEps(params.eps);
  const std::size_t n = oracle.num_real();
  ExtendedMatroid m = SizeMatroid(n, size.k);
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : StandardGreedy(oracle, size.k);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  Rng rng(seed);
  const ElementSet a =
      GuidedRandomGreedy(oracle, size, result.guide, params.t, rng);
  result.solution = result.guide;
  KeepBest(result.solution, a);
  result.candidates = 2;
  FinishRecord(result, "fastls_guided_rg", n, size.k, params, params.t, seed,
               meter);
  return result;
}

PipelineResult RunRandomized(CountedOracle& oracle, ExtendedMatroid& m,
                             const PipelineParams& params, std::uint64_t seed,
                             const std::optional<ElementSet>& z0) {
  CheckEps(params.eps);
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : MatroidGreedy(oracle, m);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  Rng rng(seed);
  const ElementSet a =
      GuidedRandomGreedy(oracle, m, result.guide, params.t, rng);
  result.solution = result.guide;
  KeepBest(result.solution, a);
  result.candidates = 2;
  FinishRecord(result, "fastls_guided_rg", m.num_real(), m.rank(), params,
               params.t, seed, meter);
  return result;
}

PipelineResult RunDetermRandom(CountedOracle& oracle, SizeConstraint size,
                               const PipelineParams& params,
                               std::uint64_t seed,
                               const std::optional<ElementSet>& z0) {
  const std::size_t n = oracle.num_real();
  const std::size_t ell = ResolveEll(params, size.k);
  ExtendedMatroid m = SizeMatroid(n, size.k);
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : StandardGreedy(oracle, size.k);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  const std::vector<std::size_t> budgets = SplitBudget(size.k, ell);
  const std::size_t guided = GuidedRounds(params.t, ell);
  const ElementSet none;

  Rng rng(seed);
  ElementSet g = WithValue(oracle, ElementSet());
  for (std::size_t i = 1; i <= ell; ++i) {
    const CandidateFamily family = GuidedInterlaceSize(
        oracle, i <= guided ? result.guide : none, g, ell, budgets[i - 1]);
    g = family.sets[UniformIndex(rng, family.size())];
  }
  result.solution = result.guide;
  KeepBest(result.solution, g);
  result.candidates = 2;
  FinishRecord(result, "determ_random", n, size.k, params, params.t, seed,
               meter);
  return result;
}

PipelineResult RunDetermRandom(CountedOracle& oracle, ExtendedMatroid& m,
                               const PipelineParams& params,
                               std::uint64_t seed,
                               const std::optional<ElementSet>& z0) {
  const std::size_t n = m.num_real();
  const std::size_t ell = ResolveEll(params, m.rank());
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : MatroidGreedy(oracle, m);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  const std::size_t guided = GuidedRounds(params.t, ell);
  const ElementSet none;

  Rng rng(seed);
  ElementSet g = WithValue(oracle, PadWithDummies(none, n, m.rank()));
  for (std::size_t i = 1; i <= ell; ++i) {
    const CandidateFamily family = GuidedInterlaceMatroid(
        oracle, m, i <= guided ? result.guide : none, g, ell);
    g = family.sets[UniformIndex(rng, family.size())];
  }
  result.solution = result.guide;
  KeepBest(result.solution, Real(g, n));
  result.candidates = 2;
  FinishRecord(result, "determ_random", n, m.rank(), params, params.t, seed,
               meter);
  return result;
}

PipelineResult RunDeterm(CountedOracle& oracle, SizeConstraint size,
                         const PipelineParams& params,
                         const std::optional<ElementSet>& z0) {
  const std::size_t n = oracle.num_real();
  const std::size_t k = size.k;
  const std::size_t ell = ResolveEll(params, k);
  ExtendedMatroid m = SizeMatroid(n, k);
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : StandardGreedy(oracle, k);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  const std::vector<std::size_t> budgets = SplitBudget(k, ell);
  const std::size_t guided = GuidedRounds(params.t, ell);
  const ElementSet none;

  bool exact = true;
  std::vector<ElementSet> level{WithValue(oracle, ElementSet())};
  for (std::size_t i = 1; i <= ell; ++i) {
    std::vector<ElementSet> next;
    for (const ElementSet& parent : level) {
      CandidateFamily family = GuidedInterlaceSize(
          oracle, i <= guided ? result.guide : none, parent, ell,
          budgets[i - 1]);
      for (ElementSet& s : family.sets) next.push_back(std::move(s));
    }
    Dedupe(next);
    exact = TrimLevel(next, params) && exact;
    level = std::move(next);
  }
  result.solution = result.guide;
  for (const ElementSet& leaf : level) {
    if (leaf.size() <= k) KeepBest(result.solution, leaf);
  }
  result.candidates = level.size() + 1;
  result.record.certified = exact;
  FinishRecord(result, "determ", n, k, params, params.t, 0, meter);
  return result;
}

PipelineResult RunDeterm(CountedOracle& oracle, ExtendedMatroid& m,
                         const PipelineParams& params,
                         const std::optional<ElementSet>& z0) {
  const std::size_t n = m.num_real();
  const std::size_t ell = ResolveEll(params, m.rank());
  RunMeter meter(oracle, &m);
  const ElementSet start = z0 ? *z0 : MatroidGreedy(oracle, m);
  PipelineResult result;
  result.guide = LocalOptimum(oracle, m, start, params.eps);
  const std::size_t guided = GuidedRounds(params.t, ell);
  const ElementSet none;

  bool exact = true;
  std::vector<ElementSet> level{
      WithValue(oracle, PadWithDummies(none, n, m.rank()))};
  for (std::size_t i = 1; i <= ell; ++i) {
    std::vector<ElementSet> next;
    for (const ElementSet& parent : level) {
      CandidateFamily family = GuidedInterlaceMatroid(
          oracle, m, i <= guided ? result.guide : none, parent, ell);
      for (ElementSet& s : family.sets) next.push_back(std::move(s));
    }
    // Bases that differ only in dummy ids stay distinct.
    Dedupe(next);
    exact = TrimLevel(next, params) && exact;
    level = std::move(next);
  }
  result.solution = result.guide;
  for (const ElementSet& leaf : level) {
    if (m.Independent(leaf)) KeepBest(result.solution, Real(leaf, n));
  }
  result.candidates = level.size() + 1;
  result.record.certified = exact;
  FinishRecord(result, "determ", n, m.rank(), params, params.t, 0, meter);
  return result;
}

PipelineResult RunNearlyLinear(CountedOracle& oracle, SizeConstraint size,
                               const PipelineParams& params) {
  CheckEps(params.eps);
  const std::size_t n = oracle.num_real();
  const std::size_t k = size.k;
  if (k == 0) throw InputError("size budget must be at least 1");
  const double eps = params.eps / 2.0;
  if (!(eps < 1.0)) throw InputError("eps must be below 2");
  const std::size_t ell1 =
      params.ell1 > 0 ? params.ell1 : GuidanceSearchRounds(params.eps);
  const std::size_t ell2 =
      params.ell2 > 0 ? params.ell2 : GuidedPhaseRounds(params.eps);
  const std::vector<std::size_t> budgets1 = SplitBudget(k, ell1);
  const std::vector<std::size_t> budgets2 = SplitBudget(k, ell2);
  const std::size_t guided = GuidedRounds(params.t, ell2);
  RunMeter meter(oracle, nullptr);
  const ElementSet none;
  bool exact = true;

  std::vector<ElementSet> pool;
  std::vector<ElementSet> level{WithValue(oracle, ElementSet())};
  for (std::size_t i = 1; i <= ell1; ++i) {
    std::vector<ElementSet> next;
    for (const ElementSet& parent : level) {
      CandidateFamily family = ThreshGuidedInterlace(
          oracle, k, none, parent, ell1, eps, budgets1[i - 1]);
      for (const ElementSet& s : family.sets) {
        next.push_back(Prune(oracle, s));
      }
    }
    Dedupe(next);
    exact = TrimLevel(next, params) && exact;
    pool.insert(pool.end(), next.begin(), next.end());
    level = std::move(next);
  }
  Dedupe(pool);

  PipelineResult result;
  result.solution = WithValue(oracle, ElementSet());
  for (const ElementSet& a : pool) {
    if (a.size() <= k) KeepBest(result.solution, a);
  }
  result.guide = result.solution;
  result.candidates = pool.size() + 1;

  for (const ElementSet& a : pool) {
    std::vector<ElementSet> tree{WithValue(oracle, ElementSet())};
    for (std::size_t i = 1; i <= ell2; ++i) {
      std::vector<ElementSet> next;
      for (const ElementSet& parent : tree) {
        CandidateFamily family =
            ThreshGuidedInterlace(oracle, k, i <= guided ? a : none, parent,
                                  ell2, eps, budgets2[i - 1]);
        for (ElementSet& s : family.sets) next.push_back(std::move(s));
      }
      Dedupe(next);
      exact = TrimLevel(next, params) && exact;
      tree = std::move(next);
    }
    for (const ElementSet& leaf : tree) {
      if (leaf.size() <= k) KeepBest(result.solution, leaf);
    }
    result.candidates += tree.size();
  }
  result.record.certified = exact;
  FinishRecord(result, "nearly_linear", n, k, params, params.t, 0, meter);
  return result;
}

}  // namespace submod
