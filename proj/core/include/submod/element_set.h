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

#ifndef SUBMOD_ELEMENT_SET_H_
#define SUBMOD_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace submod {

// Index into the extended ground set. For an instance with n real elements
// and k dummy elements, ids in [0, n) are real and ids in [n, n + k) are
// dummies. Dummies have zero marginal gain everywhere and are stripped
// before any objective evaluation.
using ElementId = std::uint32_t;

// A sorted, duplicate-free subset of the extended ground set, optionally
// carrying the objective value of its real part. Any mutation drops the
// cached value.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  // Sorts `ids`; throws InputError on duplicates.
  explicit ElementSet(std::vector<ElementId> ids);

  const std::vector<ElementId>& members() const { return members_; }
  std::span<const ElementId> span() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  ElementId operator[](std::size_t i) const { return members_[i]; }

  bool contains(ElementId id) const;
  // Returns false when `id` was already present.
  bool insert(ElementId id);
  // Returns false when `id` was absent.
  bool erase(ElementId id);

  ElementSet With(ElementId id) const;
  ElementSet Without(ElementId id) const;

  // Members with id < num_real, i.e. the set with dummies stripped.
  std::span<const ElementId> RealSpan(std::size_t num_real) const;
  ElementSet RealPart(std::size_t num_real) const;
  std::size_t CountReal(std::size_t num_real) const;

  const std::optional<double>& cached_value() const { return cached_value_; }
  void set_cached_value(double value) { cached_value_ = value; }
  void clear_cached_value() { cached_value_.reset(); }

  // "{0,3,7}"
  std::string ToString() const;

  // Equality and ordering look at members only; the lexicographic order is
  // the tie-break order used across the library.
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<ElementId> members_;
  std::optional<double> cached_value_;
};

ElementSet Union(const ElementSet& a, const ElementSet& b);
ElementSet Intersection(const ElementSet& a, const ElementSet& b);
ElementSet Difference(const ElementSet& a, const ElementSet& b);

// {0, 1, ..., n - 1}.
ElementSet FullSet(std::size_t n);

}  // namespace submod

#endif  // SUBMOD_ELEMENT_SET_H_
