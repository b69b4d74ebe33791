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

#ifndef SUBMOD_TESTS_TEST_UTIL_H_
#define SUBMOD_TESTS_TEST_UTIL_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "submod/element_set.h"
#include "submod/objectives.h"

namespace submod::testing {

inline std::shared_ptr<const MaxCutInstance> Graph(
    std::size_t n, std::vector<std::pair<ElementId, ElementId>> pairs) {
  std::vector<WeightedEdge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return std::make_shared<MaxCutInstance>(n, std::move(edges));
}

inline std::shared_ptr<const MaxCutInstance> Triangle() {
  return Graph(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline std::shared_ptr<const MaxCutInstance> Path3() {
  return Graph(3, {{0, 1}, {1, 2}});
}

inline std::shared_ptr<const MaxCutInstance> K4() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline std::shared_ptr<const MaxCutInstance> Cycle4() {
  return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline std::shared_ptr<const ModularInstance> Modular(
    std::vector<double> weights) {
  return std::make_shared<ModularInstance>(std::move(weights));
}

// Counts Evaluate calls independently of CountedOracle.
class TallyObjective : public Objective {
 public:
  explicit TallyObjective(std::shared_ptr<const Objective> inner)
      : inner_(std::move(inner)) {}

  std::size_t size() const override { return inner_->size(); }
  double Evaluate(std::span<const ElementId> members) const override {
    ++calls_;
    return inner_->Evaluate(members);
  }
  std::string Name() const override { return inner_->Name(); }

  std::uint64_t calls() const { return calls_; }

 private:
  std::shared_ptr<const Objective> inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Exhaustive maximum over bitmasks, independent of the library's
// enumerator. Ties keep the first mask in increasing (size, members) order.
struct Exhaustive {
  ElementSet set;
  double value = 0.0;
};

inline ElementSet FromMask(std::uint64_t mask, std::size_t n) {
  ElementSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) s.insert(static_cast<ElementId>(i));
  }
  return s;
}

inline Exhaustive ExhaustiveMax(
    const Objective& f,
    const std::function<bool(const ElementSet&)>& feasible) {
  const std::size_t n = f.size();
  Exhaustive best;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet s = FromMask(mask, n);
    if (!feasible(s)) continue;
    const double v = f.Evaluate(s.span());
    const bool better =
        !found || v > best.value ||
        (v == best.value &&
         (s.size() < best.set.size() ||
          (s.size() == best.set.size() && s.members() < best.set.members())));
    if (better) {
      best = {s, v};
      found = true;
    }
  }
  return best;
}

inline Exhaustive ExhaustiveMax(const Objective& f, std::size_t k) {
  return ExhaustiveMax(f, [k](const ElementSet& s) { return s.size() <= k; });
}

}  // namespace submod::testing

#endif  // SUBMOD_TESTS_TEST_UTIL_H_
