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

#ifndef SUBMOD_INTERLACE_H_
#define SUBMOD_INTERLACE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "submod/element_set.h"
#include "submod/matroid.h"
#include "submod/oracle.h"

namespace submod {

// Output of one interlaced-greedy call. For the size-constraint variants,
// labels[i] = (u, l) with u in [0, ell] and l in [1, ell]; for the matroid
// variant labels[i] = (0, j). Every set carries its cached value.
struct CandidateFamily {
  std::vector<ElementSet> sets;
  std::vector<std::pair<std::size_t, std::size_t>> labels;

  std::size_t size() const { return sets.size(); }
};

// Splits a budget of k elements over ell rounds: k / ell each, the first
// k % ell rounds one more. Throws InputError unless 1 <= ell <= k.
std::vector<std::size_t> SplitBudget(std::size_t k, std::size_t ell);

// Guided interlaced greedy for a size constraint. Takes the ell largest
// gains on G outside G u Z as anchors (missing anchors are dummies), seeds
// branch u = 0 with A_{0,l} = G + a_l and branch u >= 1 with
// A_{u,l} = G + a_u for every l, then for budget - 1 rounds lets each set
// of a branch in turn take its argmax-gain element outside Z and outside
// the branch's union (a dummy, i.e. nothing, when no gain is >= 0).
// Returns ell (ell + 1) sets of real elements.
//
// `g` and `guide` hold real ids. Throws InputError when ell == 0 or
// budget == 0.
CandidateFamily GuidedInterlaceSize(CountedOracle& oracle,
                                    const ElementSet& guide,
                                    const ElementSet& g, std::size_t ell,
                                    std::size_t budget);

// Guided interlaced greedy for a matroid. Grows one auxiliary independent
// set A over `rank` rounds, each adding the (j, x) pair maximizing
// gain(x | G u A_j) over x outside G u A u Z with A + x independent, and
// assigns x to bucket A_j. A matching sigma of A's elements into G is then
// found such that (G \ sigma^{-1}(A_j)) u A_j is a basis for every j; those
// ell bases are returned (dummy ids included).
//
// Throws InputError when `g` is not a basis, ResourceError when the search
// for sigma exceeds its budget.
CandidateFamily GuidedInterlaceMatroid(CountedOracle& oracle,
                                       ExtendedMatroid& m,
                                       const ElementSet& guide,
                                       const ElementSet& g, std::size_t ell);

struct ThresholdAddResult {
  ElementSet set;
  double tau = 0.0;
  bool added = false;
};

// Descending-threshold scan. Scans `pool` (ascending ids) at threshold tau
// and returns A + x for the first x with gain(x | A) >= tau. After a full
// scan without success tau is multiplied by (1 - eps) and the scan restarts,
// until tau < tau_min. `a` must carry its cached value.
ThresholdAddResult ThresholdAdd(CountedOracle& oracle,
                                std::span<const ElementId> pool,
                                const ElementSet& a, double eps, double tau,
                                double tau_min);

// Per-set state of the threshold scan. `cursor` is the first id not yet
// scanned at the current tau; by submodularity no earlier id can reach tau
// again once A grows, so resuming at the cursor selects the same element as
// a rescan from the start.
struct ThresholdState {
  double tau = 0.0;
  double tau_min = 0.0;
  double anchor_gain = 0.0;
  ElementId cursor = 0;
  bool active = true;
};

// ThresholdAdd resuming from state->cursor; updates tau and the cursor.
ThresholdAddResult ThresholdAddFrom(CountedOracle& oracle,
                                    std::span<const ElementId> pool,
                                    const ElementSet& a, double eps,
                                    ThresholdState* state);

// Interlaced greedy with descending thresholds. Same anchors and branch
// structure as GuidedInterlaceSize; branch u uses the anchor gain
// M = gain(a_ell | G) for u = 0 and gain(a_u | G) otherwise, and every set
// grows through ThresholdAddFrom with tau starting at M until it holds
// `budget` elements beyond G or tau < eps * M / k. Branches with M <= 0 do
// not grow past their seeds.
CandidateFamily ThreshGuidedInterlace(CountedOracle& oracle, std::size_t k,
                                      const ElementSet& guide,
                                      const ElementSet& g, std::size_t ell,
                                      double eps, std::size_t budget);

}  // namespace submod

#endif  // SUBMOD_INTERLACE_H_
