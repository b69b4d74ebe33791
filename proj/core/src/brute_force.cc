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

#include "submod/brute_force.h"

#include <cmath>
#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

// Number of subsets of size <= r of an n-set, saturating at limit + 1.
std::uint64_t CountSubsets(std::size_t n, std::size_t r, std::uint64_t limit) {
  double total = 0.0;
  double binom = 1.0;
  for (std::size_t i = 0; i <= r && i <= n; ++i) {
    if (i > 0) binom = binom * static_cast<double>(n - i + 1) / static_cast<double>(i);
    total += binom;
    if (total > static_cast<double>(limit)) return limit + 1;
  }
  return static_cast<std::uint64_t>(std::llround(total));
}

template <typename Feasible>
BruteForceResult Enumerate(CountedOracle& oracle, std::size_t max_size,
                           std::uint64_t limit, Feasible&& feasible) {
  const std::size_t n = oracle.num_real();
  const std::uint64_t count = CountSubsets(n, max_size, limit);
  if (count > limit) {
    throw ResourceError("brute force over n = " + std::to_string(n) +
                        " with size bound " + std::to_string(max_size) +
                        " exceeds the limit of " + std::to_string(limit) +
                        " sets");
  }
  BruteForceResult best;
  bool found = false;
  std::vector<ElementId> best_members;
  ForEachSubset(n, max_size, [&](const std::vector<ElementId>& members) {
    ++best.sets_examined;
    ElementSet s(members);
    if (!feasible(s)) return;
    const double v = oracle.Value(s);
    if (!found || v > best.value ||
        (v == best.value && members < best_members)) {
      found = true;
      best.value = v;
      best_members = members;
    }
  });
  best.set = ElementSet(best_members);
  best.set.set_cached_value(best.value);
  return best;
}

}  // namespace

BruteForceResult BruteForceOpt(CountedOracle& oracle, SizeConstraint size,
                               std::uint64_t limit) {
  return Enumerate(oracle, size.k, limit,
                   [](const ElementSet&) { return true; });
}

BruteForceResult BruteForceOpt(CountedOracle& oracle, ExtendedMatroid& m,
                               std::uint64_t limit) {
  return Enumerate(oracle, m.rank(), limit,
                   [&m](const ElementSet& s) { return m.Independent(s); });
}

}  // namespace submod
