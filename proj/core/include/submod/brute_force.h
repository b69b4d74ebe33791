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

#ifndef SUBMOD_BRUTE_FORCE_H_
#define SUBMOD_BRUTE_FORCE_H_

#include <cstdint>

#include "submod/element_set.h"
#include "submod/matroid.h"
#include "submod/oracle.h"

namespace submod {

struct BruteForceResult {
  ElementSet set;
  double value = 0.0;
  std::uint64_t sets_examined = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1}
                                                          << 24;

// Exact maximizer over all sets of at most k real elements, enumerated by
// size and then lexicographically; ties go to the lexicographically
// smallest member list. Throws ResourceError when the number of feasible
// sets exceeds `limit`.
BruteForceResult BruteForceOpt(CountedOracle& oracle, SizeConstraint size,
                               std::uint64_t limit = kDefaultEnumerationLimit);

// Same over the independent sets of `m`. The limit bounds the number of
// candidate subsets inspected (sets of size <= rank).
BruteForceResult BruteForceOpt(CountedOracle& oracle, ExtendedMatroid& m,
                               std::uint64_t limit = kDefaultEnumerationLimit);

// Calls visit(members) for every subset of {0..n-1} with size <= max_size,
// ordered by size and then lexicographically.
template <typename Visitor>
void ForEachSubset(std::size_t n, std::size_t max_size, Visitor&& visit);

}  // namespace submod

#include "submod/internal/subsets_impl.h"

#endif  // SUBMOD_BRUTE_FORCE_H_
