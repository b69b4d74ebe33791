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

#ifndef SUBMOD_GREEDY_H_
#define SUBMOD_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "submod/element_set.h"
#include "submod/matroid.h"
#include "submod/oracle.h"
#include "submod/random.h"

namespace submod {

// Iterations i <= boundary() of a k-step guided greedy avoid the guidance
// set; later ones do not.
class SwitchSchedule {
 public:
  // Throws InputError unless 0 <= t <= 1.
  SwitchSchedule(double t, std::size_t k);

  double t() const { return t_; }
  // floor(t * k)
  std::size_t boundary() const { return boundary_; }
  bool guided(std::size_t iteration) const { return iteration <= boundary_; }

 private:
  double t_;
  std::size_t boundary_;
};

struct TraceStep {
  std::size_t iteration = 0;
  ElementId picked = 0;
  // The dummy slot consumed (size constraint) or sigma(picked) (matroid).
  ElementId displaced = 0;
};

struct RunTrace {
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
};

// Rebuilds the final set from a trace: for a size constraint every real
// pick is added; for a matroid the all-dummy basis is updated by
// A + picked - displaced. Dummies are stripped from the result.
ElementSet ReplayTrace(const RunTrace& trace, std::size_t num_real,
                       std::size_t k, bool matroid);

// CSV "iteration,picked,displaced" preceded by a "# seed=<seed>" line.
void WriteTraceCsv(std::ostream& out, const RunTrace& trace);
RunTrace ReadTraceCsv(std::istream& in);

// Classical greedy: k rounds, each adding the element of largest marginal
// gain (ties smallest id); stops early once the best gain is <= 0.
ElementSet StandardGreedy(CountedOracle& oracle, std::size_t k);

// Greedy under a matroid: each round adds the largest-gain element that
// keeps the set independent; stops once no such element has positive gain.
ElementSet MatroidGreedy(CountedOracle& oracle, ExtendedMatroid& m);

// Guided random greedy under a size constraint. Iteration i picks
// uniformly from the k largest gains on A_{i-1} among the real elements
// outside A_{i-1} (and outside `guide` while i <= floor(t k)) together with
// k dummies of gain 0, ties by smallest id. Dummy picks leave A unchanged.
// Throws InputError when |guide| > k.
ElementSet GuidedRandomGreedy(CountedOracle& oracle, SizeConstraint size,
                              const ElementSet& guide, double t, Rng& rng,
                              RunTrace* trace = nullptr);

// Matroid branch: A_0 is the all-dummy basis. Iteration i takes
// M_i = MaxGainBasis(A_{i-1}, excluded = guide while guided), a matching
// sigma of M_i into A_{i-1}, and sets A_i = A_{i-1} + x - sigma(x) for a
// uniform x in M_i. Throws InputError when `guide` is not independent.
ElementSet GuidedRandomGreedy(CountedOracle& oracle, ExtendedMatroid& m,
                              const ElementSet& guide, double t, Rng& rng,
                              RunTrace* trace = nullptr);

// Unguided versions: GuidedRandomGreedy with an empty guide and t = 0.
ElementSet RandomGreedy(CountedOracle& oracle, SizeConstraint size, Rng& rng,
                        RunTrace* trace = nullptr);
ElementSet RandomGreedy(CountedOracle& oracle, ExtendedMatroid& m, Rng& rng,
                        RunTrace* trace = nullptr);

}  // namespace submod

#endif  // SUBMOD_GREEDY_H_
