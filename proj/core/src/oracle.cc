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

#include "submod/oracle.h"

#include <algorithm>
#include <string>
#include <utility>

#include "submod/errors.h"

namespace submod {

CountedOracle::CountedOracle(std::shared_ptr<const Objective> objective,
                             std::size_t num_dummies)
    : objective_(std::move(objective)),
      num_real_(objective_ ? objective_->size() : 0),
      num_dummies_(num_dummies) {
  if (!objective_) throw InputError("oracle needs an objective");
}

void CountedOracle::CheckIds(const ElementSet& s) const {
  if (!s.empty() && s.members().back() >= extended_size()) {
    throw InputError("element id " + std::to_string(s.members().back()) +
                     " outside extended ground set of size " +
                     std::to_string(extended_size()));
  }
}

double CountedOracle::Value(const ElementSet& s) {
  CheckIds(s);
  ++value_queries_;
  return objective_->Evaluate(s.RealSpan(num_real_));
}

double CountedOracle::Evaluate(ElementSet& s) {
  const double value = Value(s);
  s.set_cached_value(value);
  return value;
}

double CountedOracle::CachedValue(const ElementSet& s) {
  if (s.cached_value()) return *s.cached_value();
  return Value(s);
}

double CountedOracle::Gain(ElementId x, const ElementSet& s) {
  if (x >= extended_size()) {
    throw InputError("element id " + std::to_string(x) + " out of range");
  }
  if (is_dummy(x) || s.contains(x)) {
    CheckIds(s);
    return 0.0;
  }
  return Gain(x, s, CachedValue(s));
}

double CountedOracle::Gain(ElementId x, const ElementSet& s, double s_value) {
  if (x >= extended_size()) {
    throw InputError("element id " + std::to_string(x) + " out of range");
  }
  CheckIds(s);
  if (is_dummy(x) || s.contains(x)) return 0.0;
  auto reals = s.RealSpan(num_real_);
  scratch_.assign(reals.begin(), reals.end());
  scratch_.insert(std::lower_bound(scratch_.begin(), scratch_.end(), x), x);
  ++value_queries_;
  return objective_->Evaluate(scratch_) - s_value;
}

}  // namespace submod
