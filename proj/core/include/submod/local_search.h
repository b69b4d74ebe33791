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

#ifndef SUBMOD_LOCAL_SEARCH_H_
#define SUBMOD_LOCAL_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "submod/element_set.h"
#include "submod/matroid.h"
#include "submod/oracle.h"

namespace submod {

struct SwapEvent {
  ElementId removed = 0;
  ElementId added = 0;
  double value_before = 0.0;
  double value_after = 0.0;
};

struct LocalSearchResult {
  // Dummies stripped; cached value set.
  ElementSet solution;
  std::vector<SwapEvent> swaps;
  // Rounds that scanned for a swap, including the final unsuccessful one.
  std::size_t rounds = 0;
};

// Swap local search over the independent sets of `m`. Z starts as z0 padded
// with dummies to a basis. Each round computes the loss f(Z) - f(Z - a) of
// every a in Z and the gain f(Z + e) - f(Z) of every e in `ground` \ Z
// (plus one free dummy), then performs the independent swap maximizing
// gain - loss, ties by smallest (a, e), provided it is at least
// (eps / k) * f(Z). Stops when no such swap exists.
//
// `ground` lists the real elements allowed to enter. Throws InputError when
// z0 is not independent, eps <= 0 or f(z0) <= 0.
LocalSearchResult FastLocalSearch(CountedOracle& oracle, ExtendedMatroid& m,
                                  const ElementSet& ground,
                                  const ElementSet& z0, double eps);

// Runs FastLocalSearch twice, the second time over the ground set minus the
// first result, and returns the better of the two. The second run starts
// from z0 minus the first result when that still has positive value, and
// from the best singleton of the reduced ground set otherwise.
ElementSet FastLocalSearchTwoPass(CountedOracle& oracle, ExtendedMatroid& m,
                                  const ElementSet& z0, double eps);

// Exhaustive check of the local-search certificate: true iff
// f(S u Z) + f(S n Z) <= (2 + eps) f(Z) + tolerance for every independent
// real set S. Throws ResourceError when 2^n exceeds `max_sets`.
bool CertifyLocalOptimum(CountedOracle& oracle, ExtendedMatroid& m,
                         const ElementSet& z, double eps,
                         double tolerance = 1e-7,
                         std::uint64_t max_sets = std::uint64_t{1} << 22);

// Single pass over a snapshot of `a` in ascending id order that removes x
// whenever f(A) - f(A - x) < 0 for the current A. Dummies are dropped.
ElementSet Prune(CountedOracle& oracle, const ElementSet& a);

// The (alpha, beta)-guidance conditions for a set Z against a known
// optimum O:
//   1) f(Z) < alpha f(O)
//   2) f(O n Z) <= alpha f(O)
//   3) f(O u Z) <= beta f(O), or 3') f(O n Z) + f(O u Z) <= (alpha + beta)
//      f(O).
struct GuidanceCertificate {
  double alpha = 0.0;
  double beta = 0.0;
  double f_z = 0.0;
  double f_opt = 0.0;
  double f_intersection = 0.0;
  double f_union = 0.0;

  bool value_condition() const { return f_z < alpha * f_opt; }
  bool intersection_condition(double tol = 1e-9) const {
    return f_intersection <= alpha * f_opt + tol;
  }
  bool union_condition(double tol = 1e-9) const {
    return f_union <= beta * f_opt + tol;
  }
  bool combined_condition(double tol = 1e-9) const {
    return f_intersection + f_union <= (alpha + beta) * f_opt + tol;
  }
  bool holds(double tol = 1e-9) const {
    return value_condition() && intersection_condition(tol) &&
           (union_condition(tol) || combined_condition(tol));
  }
};

GuidanceCertificate CheckGuidance(CountedOracle& oracle, const ElementSet& z,
                                  const ElementSet& opt, double alpha,
                                  double beta);

// CSV "step,removed,added,value", one row per swap; value is the value
// after the swap.
void WriteSwapLogCsv(std::ostream& out, const std::vector<SwapEvent>& swaps);

}  // namespace submod

#endif  // SUBMOD_LOCAL_SEARCH_H_
