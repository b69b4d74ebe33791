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

#include "submod/interlace.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

// Search steps allowed when looking for the exchange map of the matroid
// variant.
constexpr std::uint64_t kExchangeSearchBudget = std::uint64_t{1} << 22;

struct Anchor {
  // Empty for a dummy anchor.
  std::optional<ElementId> id;
  double gain = 0.0;
};

void CheckReal(const ElementSet& s, std::size_t n, const char* what) {
  if (!s.empty() && s.members().back() >= n) {
    throw InputError(std::string(what) + " must hold real element ids");
  }
}

// Top `ell` gains on G among real elements outside G u Z, competing with
// dummies of gain 0; ties go to the smallest id, so a real element of gain
// exactly 0 still beats a dummy.
std::vector<Anchor> TopAnchors(CountedOracle& oracle, const ElementSet& guide,
                               const ElementSet& g, double g_value,
                               std::size_t ell) {
  std::vector<Anchor> all;
  for (ElementId x = 0; x < oracle.num_real(); ++x) {
    if (g.contains(x) || guide.contains(x)) continue;
    all.push_back({x, oracle.Gain(x, g, g_value)});
  }
  std::sort(all.begin(), all.end(), [](const Anchor& l, const Anchor& r) {
    return l.gain != r.gain ? l.gain > r.gain : *l.id < *r.id;
  });
  std::vector<Anchor> top;
  for (const Anchor& a : all) {
    if (top.size() == ell || a.gain < 0.0) break;
    top.push_back(a);
  }
  top.resize(ell);
  return top;
}

ElementSet Seed(const ElementSet& g, double g_value, const Anchor& a) {
  ElementSet s = g;
  if (a.id) s.insert(*a.id);
  s.set_cached_value(g_value + a.gain);
  return s;
}

}  // namespace

std::vector<std::size_t> SplitBudget(std::size_t k, std::size_t ell) {
  if (ell == 0 || ell > k) {
    throw InputError("round count " + std::to_string(ell) +
                     " must lie in [1, " + std::to_string(k) + "]");
  }
  std::vector<std::size_t> budgets(ell, k / ell);
  for (std::size_t i = 0; i < k % ell; ++i) ++budgets[i];
  return budgets;
}

CandidateFamily GuidedInterlaceSize(CountedOracle& oracle,
                                    const ElementSet& guide,
                                    const ElementSet& g, std::size_t ell,
                                    std::size_t budget) {
  if (ell == 0 || budget == 0) {
    throw InputError("interlaced greedy needs ell >= 1 and budget >= 1");
  }
  const std::size_t n = oracle.num_real();
  CheckReal(g, n, "starting set");
  CheckReal(guide, n, "guidance set");
  const double g_value = oracle.CachedValue(g);
  const std::vector<Anchor> anchors = TopAnchors(oracle, guide, g, g_value, ell);

  CandidateFamily family;
  for (std::size_t u = 0; u <= ell; ++u) {
    std::vector<ElementSet> sets;
    std::vector<bool> claimed(n, false);
    for (ElementId x : g) claimed[x] = true;
    for (std::size_t l = 0; l < ell; ++l) {
      const Anchor& a = u == 0 ? anchors[l] : anchors[u - 1];
      sets.push_back(Seed(g, g_value, a));
      if (a.id) claimed[*a.id] = true;
    }
    for (std::size_t round = 1; round < budget; ++round) {
      for (ElementSet& s : sets) {
        const double s_value = *s.cached_value();
        std::optional<ElementId> best;
        double best_gain = 0.0;
        for (ElementId x = 0; x < n; ++x) {
          if (claimed[x] || guide.contains(x)) continue;
          const double gain = oracle.Gain(x, s, s_value);
          if (!best || gain > best_gain) {
            best = x;
            best_gain = gain;
          }
        }
        if (!best || best_gain < 0.0) continue;
        s.insert(*best);
        s.set_cached_value(s_value + best_gain);
        claimed[*best] = true;
      }
    }
    for (std::size_t l = 0; l < ell; ++l) {
      family.sets.push_back(std::move(sets[l]));
      family.labels.emplace_back(u, l + 1);
    }
  }
  return family;
}

namespace {

// Backtracking search for the map of A's real elements into G.
class ExchangeSearch {
 public:
  ExchangeSearch(ExtendedMatroid& m, const ElementSet& g,
                 const std::vector<ElementSet>& buckets)
      : m_(m), g_(g) {
    for (std::size_t j = 0; j < buckets.size(); ++j) {
      for (ElementId x : buckets[j]) order_.push_back({x, j});
    }
    assigned_.assign(order_.size(), 0);
    used_.assign(g.size(), false);
  }

  // On success assigned_[i] is the G element given up for order_[i].
  bool Run() { return Assign(0); }

  // G with the elements order_[begin, end) exchanged in.
  ElementSet Output(std::size_t begin, std::size_t end) const {
    ElementSet out = g_;
    for (std::size_t i = begin; i < end; ++i) {
      out.erase(assigned_[i]);
      out.insert(order_[i].first);
    }
    return out;
  }

 private:
  bool Assign(std::size_t i) {
    if (i == order_.size()) return true;
    if (++steps_ > kExchangeSearchBudget) {
      throw ResourceError("exchange search exceeded its step budget");
    }
    const ElementId x = order_[i].first;
    const std::size_t j = order_[i].second;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    for (std::size_t p = 0; p < g_.size(); ++p) {
      if (used_[p]) continue;
      ElementSet single = g_.Without(g_[p]);
      single.insert(x);
      (m_.Independent(single) ? first : second).push_back(p);
    }
    first.insert(first.end(), second.begin(), second.end());
    const bool closes_bucket =
        i + 1 == order_.size() || order_[i + 1].second != j;
    for (std::size_t p : first) {
      used_[p] = true;
      assigned_[i] = g_[p];
      bool ok = true;
      if (closes_bucket) {
        std::size_t begin = i;
        while (begin > 0 && order_[begin - 1].second == j) --begin;
        ok = m_.IsBasis(Output(begin, i + 1));
      }
      if (ok && Assign(i + 1)) return true;
      used_[p] = false;
    }
    return false;
  }

  ExtendedMatroid& m_;
  const ElementSet& g_;
  std::vector<std::pair<ElementId, std::size_t>> order_;
  std::vector<ElementId> assigned_;
  std::vector<bool> used_;
  std::uint64_t steps_ = 0;
};

}  // namespace

CandidateFamily GuidedInterlaceMatroid(CountedOracle& oracle,
                                       ExtendedMatroid& m,
                                       const ElementSet& guide,
                                       const ElementSet& g, std::size_t ell) {
  if (ell == 0) throw InputError("interlaced greedy needs ell >= 1");
  const std::size_t n = m.num_real();
  CheckReal(guide, n, "guidance set");
  if (!m.IsBasis(g)) {
    throw InputError("starting set " + g.ToString() + " is not a basis");
  }

  std::vector<ElementSet> buckets(ell);
  std::vector<ElementSet> grown(ell, g);
  const double g_value = oracle.CachedValue(g);
  for (ElementSet& s : grown) s.set_cached_value(g_value);

  ElementSet a;
  std::vector<bool> blocked(n, false);
  for (ElementId x : g) {
    if (x < n) blocked[x] = true;
  }
  for (ElementId x : guide) blocked[x] = true;
  for (std::size_t round = 0; round < m.rank(); ++round) {
    bool found = false;
    double best_gain = 0.0;
    ElementId best_x = 0;
    std::size_t best_j = 0;
    for (ElementId x = 0; x < n; ++x) {
      if (blocked[x]) continue;
      if (!m.Independent(a.With(x))) {
        // Stays dependent as A grows.
        blocked[x] = true;
        continue;
      }
      for (std::size_t j = 0; j < ell; ++j) {
        const double gain =
            oracle.Gain(x, grown[j], *grown[j].cached_value());
        if (!found || gain > best_gain) {
          found = true;
          best_gain = gain;
          best_x = x;
          best_j = j;
        }
      }
    }
    // The remaining picks would all be dummies, which are null here.
    if (!found || best_gain < 0.0) break;
    a.insert(best_x);
    blocked[best_x] = true;
    buckets[best_j].insert(best_x);
    const double v = *grown[best_j].cached_value() + best_gain;
    grown[best_j].insert(best_x);
    grown[best_j].set_cached_value(v);
  }

  ExchangeSearch search(m, g, buckets);
  if (!search.Run()) {
    throw ResourceError("no exchange map found for the interlaced bases");
  }
  CandidateFamily family;
  std::size_t begin = 0;
  for (std::size_t j = 0; j < ell; ++j) {
    const std::size_t end = begin + buckets[j].size();
    ElementSet out = search.Output(begin, end);
    if (begin == end) {
      out.set_cached_value(g_value);
    } else {
      out.set_cached_value(oracle.Value(out));
    }
    family.sets.push_back(std::move(out));
    family.labels.emplace_back(0, j + 1);
    begin = end;
  }
  return family;
}

ThresholdAddResult ThresholdAdd(CountedOracle& oracle,
                                std::span<const ElementId> pool,
                                const ElementSet& a, double eps, double tau,
                                double tau_min) {
  ThresholdState state;
  state.tau = tau;
  state.tau_min = tau_min;
  return ThresholdAddFrom(oracle, pool, a, eps, &state);
}

ThresholdAddResult ThresholdAddFrom(CountedOracle& oracle,
                                    std::span<const ElementId> pool,
                                    const ElementSet& a, double eps,
                                    ThresholdState* state) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InputError("threshold decay eps must lie in (0, 1)");
  }
  if (!(state->tau_min > 0.0) || state->tau < 0.0) {
    throw InputError("thresholds need tau >= 0 and tau_min > 0");
  }
  const double a_value = oracle.CachedValue(a);
  while (state->tau >= state->tau_min) {
    auto it = std::lower_bound(pool.begin(), pool.end(), state->cursor);
    for (; it != pool.end(); ++it) {
      const ElementId x = *it;
      if (a.contains(x)) continue;
      const double gain = oracle.Gain(x, a, a_value);
      if (gain >= state->tau) {
        state->cursor = x + 1;
        ElementSet grown = a.With(x);
        grown.set_cached_value(a_value + gain);
        return {std::move(grown), state->tau, true};
      }
    }
    state->tau *= 1.0 - eps;
    state->cursor = 0;
  }
  state->active = false;
  ElementSet same = a;
  same.set_cached_value(a_value);
  return {std::move(same), state->tau, false};
}

CandidateFamily ThreshGuidedInterlace(CountedOracle& oracle, std::size_t k,
                                      const ElementSet& guide,
                                      const ElementSet& g, std::size_t ell,
                                      double eps, std::size_t budget) {
  if (ell == 0 || budget == 0 || k == 0) {
    throw InputError("threshold interlacing needs k, ell, budget >= 1");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InputError("threshold interlacing needs eps in (0, 1)");
  }
  const std::size_t n = oracle.num_real();
  CheckReal(g, n, "starting set");
  CheckReal(guide, n, "guidance set");
  const double g_value = oracle.CachedValue(g);
  const std::vector<Anchor> anchors = TopAnchors(oracle, guide, g, g_value, ell);

  CandidateFamily family;
  for (std::size_t u = 0; u <= ell; ++u) {
    const double anchor_gain =
        u == 0 ? anchors[ell - 1].gain : anchors[u - 1].gain;
    std::vector<ElementSet> sets;
    std::vector<bool> claimed(n, false);
    for (ElementId x : g) claimed[x] = true;
    for (std::size_t l = 0; l < ell; ++l) {
      const Anchor& a = u == 0 ? anchors[l] : anchors[u - 1];
      sets.push_back(Seed(g, g_value, a));
      if (a.id) claimed[*a.id] = true;
    }

    if (anchor_gain > 0.0 && budget > 1) {
      std::vector<ElementId> pool;
      for (ElementId x = 0; x < n; ++x) {
        if (!claimed[x] && !guide.contains(x)) pool.push_back(x);
      }
      std::vector<ThresholdState> states(ell);
      std::vector<std::size_t> slots(ell, 1);
      for (ThresholdState& s : states) {
        s.tau = anchor_gain;
        s.tau_min = eps * anchor_gain / static_cast<double>(k);
        s.anchor_gain = anchor_gain;
      }
      bool any = true;
      while (any) {
        any = false;
        for (std::size_t l = 0; l < ell; ++l) {
          if (!states[l].active || slots[l] >= budget) continue;
          ThresholdAddResult r =
              ThresholdAddFrom(oracle, pool, sets[l], eps, &states[l]);
          if (r.added) {
            const ElementId x = states[l].cursor - 1;
            pool.erase(std::lower_bound(pool.begin(), pool.end(), x));
            sets[l] = std::move(r.set);
            ++slots[l];
          }
          if (states[l].active && slots[l] < budget) any = true;
        }
      }
    }
    for (std::size_t l = 0; l < ell; ++l) {
      family.sets.push_back(std::move(sets[l]));
      family.labels.emplace_back(u, l + 1);
    }
  }
  return family;
}

}  // namespace submod
