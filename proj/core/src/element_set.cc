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

#include "submod/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>

#include "submod/errors.h"

namespace submod {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InputError("duplicate element id in set");
  }
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool ElementSet::insert(ElementId id) {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it != members_.end() && *it == id) return false;
  members_.insert(it, id);
  cached_value_.reset();
  return true;
}

bool ElementSet::erase(ElementId id) {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) return false;
  members_.erase(it);
  cached_value_.reset();
  return true;
}

ElementSet ElementSet::With(ElementId id) const {
  ElementSet out;
  out.members_ = members_;
  out.insert(id);
  return out;
}

ElementSet ElementSet::Without(ElementId id) const {
  ElementSet out;
  out.members_ = members_;
  out.erase(id);
  return out;
}

std::span<const ElementId> ElementSet::RealSpan(std::size_t num_real) const {
  auto end = std::lower_bound(members_.begin(), members_.end(),
                              static_cast<ElementId>(num_real));
  return {members_.data(),
          static_cast<std::size_t>(std::distance(members_.begin(), end))};
}

ElementSet ElementSet::RealPart(std::size_t num_real) const {
  auto reals = RealSpan(num_real);
  ElementSet out;
  out.members_.assign(reals.begin(), reals.end());
  // Dummies never change the value.
  out.cached_value_ = cached_value_;
  return out;
}

std::size_t ElementSet::CountReal(std::size_t num_real) const {
  return RealSpan(num_real).size();
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  out += '}';
  return out;
}

ElementSet Union(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet Intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet Difference(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet FullSet(std::size_t n) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return ElementSet(std::move(ids));
}

}  // namespace submod
