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

#ifndef SUBMOD_ORACLE_H_
#define SUBMOD_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "submod/element_set.h"
#include "submod/objectives.h"

namespace submod {

// Value-oracle access to an objective over the extended ground set
// [0, n + num_dummies). Every call that reaches the objective increments
// value_queries() by exactly one; dummy ids are stripped beforehand.
//
// One CountedOracle per algorithm run. The objective is shared and
// immutable; the counter and scratch buffer are not thread-safe.
class CountedOracle {
 public:
  CountedOracle(std::shared_ptr<const Objective> objective,
                std::size_t num_dummies);

  std::size_t num_real() const { return num_real_; }
  std::size_t num_dummies() const { return num_dummies_; }
  std::size_t extended_size() const { return num_real_ + num_dummies_; }
  bool is_dummy(ElementId id) const { return id >= num_real_; }
  ElementId dummy(std::size_t i) const {
    return static_cast<ElementId>(num_real_ + i);
  }

  // f(S with dummies stripped). One query. Throws InputError on ids outside
  // the extended ground set.
  double Value(const ElementSet& s);
  // Value() and stores the result in the set's cache.
  double Evaluate(ElementSet& s);
  // f(S) from the cache when present, otherwise Value().
  double CachedValue(const ElementSet& s);

  // f(S + x) - f(S). Zero without a query when x is a dummy or already in
  // S. Costs one query when f(S) is cached, two otherwise.
  double Gain(ElementId x, const ElementSet& s);
  // Same, with f(S) supplied by the caller. One query at most.
  double Gain(ElementId x, const ElementSet& s, double s_value);

  std::uint64_t value_queries() const { return value_queries_; }
  void reset_value_queries() { value_queries_ = 0; }
  const Objective& objective() const { return *objective_; }
  const std::shared_ptr<const Objective>& shared_objective() const {
    return objective_;
  }

 private:
  void CheckIds(const ElementSet& s) const;

  std::shared_ptr<const Objective> objective_;
  std::size_t num_real_;
  std::size_t num_dummies_;
  std::uint64_t value_queries_ = 0;
  std::vector<ElementId> scratch_;
};

}  // namespace submod

#endif  // SUBMOD_ORACLE_H_
