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

#ifndef SUBMOD_MATROID_H_
#define SUBMOD_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submod/element_set.h"
#include "submod/oracle.h"

namespace submod {

// Feasible sets are those with at most k real elements.
struct SizeConstraint {
  std::size_t k = 0;
};

// Independence oracle over real elements {0, ..., ground_size() - 1}.
// Implementations are immutable.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual std::size_t ground_size() const = 0;
  // Size of every basis.
  virtual std::size_t rank() const = 0;
  // `members` is sorted, duplicate-free, real ids only.
  virtual bool IsIndependent(std::span<const ElementId> members) const = 0;
  virtual std::string Describe() const = 0;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t k);

  std::size_t ground_size() const override { return n_; }
  std::size_t rank() const override { return k_; }
  bool IsIndependent(std::span<const ElementId> members) const override;
  std::string Describe() const override;

 private:
  std::size_t n_;
  std::size_t k_;
};

// Every element belongs to exactly one block; a set is independent iff it
// holds at most capacity[b] elements of each block b.
class PartitionMatroid : public Matroid {
 public:
  // `block_of[e]` is the block of element e. Throws InputError when a block
  // id is out of range.
  PartitionMatroid(std::vector<std::size_t> block_of,
                   std::vector<std::size_t> capacity);
  // Elements are assigned to `num_blocks` contiguous blocks of (nearly)
  // equal size, each with the same capacity.
  static PartitionMatroid Contiguous(std::size_t n, std::size_t num_blocks,
                                     std::size_t capacity);

  std::size_t ground_size() const override { return block_of_.size(); }
  std::size_t rank() const override { return rank_; }
  bool IsIndependent(std::span<const ElementId> members) const override;
  std::string Describe() const override;

  std::size_t num_blocks() const { return capacity_.size(); }
  std::size_t block_of(ElementId e) const { return block_of_[e]; }
  std::size_t capacity(std::size_t block) const { return capacity_[block]; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> capacity_;
  std::size_t rank_ = 0;
};

// A base matroid over n real elements extended with k = rank dummies
// (ids n..n+k-1): S is independent iff |S| <= k and its real part is
// independent in the base. Counts independence calls separately from value
// queries. One instance per algorithm run.
class ExtendedMatroid {
 public:
  explicit ExtendedMatroid(std::shared_ptr<const Matroid> base);

  std::size_t num_real() const { return base_->ground_size(); }
  std::size_t rank() const { return base_->rank(); }
  std::size_t extended_size() const { return num_real() + rank(); }
  bool is_dummy(ElementId id) const { return id >= num_real(); }
  const Matroid& base() const { return *base_; }
  const std::shared_ptr<const Matroid>& shared_base() const { return base_; }

  // One independence call. Throws InputError on ids outside the extended
  // ground set.
  bool Independent(const ElementSet& s);
  // Independent and of size rank().
  bool IsBasis(const ElementSet& s);

  std::uint64_t independence_calls() const { return independence_calls_; }
  void reset_independence_calls() { independence_calls_ = 0; }

 private:
  std::shared_ptr<const Matroid> base_;
  std::uint64_t independence_calls_ = 0;
};

// Adds the smallest unused dummy ids (num_real, num_real + 1, ...) until the
// set has k members. Throws InputError when |s| > k.
ElementSet PadWithDummies(const ElementSet& s, std::size_t num_real,
                          std::size_t k);

// A basis of `m` inside the extended ground set minus (A u excluded) that
// maximizes the total marginal gain on A. Matroid greedy: real candidates
// and the free dummies (gain 0) are sorted by gain descending, id
// ascending, and added while independent. Costs one query per real
// candidate (plus one if f(A) is not cached).
//
// If the free dummies cannot complete a basis the result is a maximal
// independent set of the eligible elements, of size < rank.
ElementSet MaxGainBasis(CountedOracle& oracle, ExtendedMatroid& m,
                        const ElementSet& a, const ElementSet& excluded);

// Pairs (e, sigma(e)) sorted by e.
struct ExchangeMap {
  std::vector<std::pair<ElementId, ElementId>> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
  // Throws std::out_of_range when e is not in the domain.
  ElementId at(ElementId e) const;
};

// Bijection sigma from B_from \ B_to onto B_to \ B_from such that
// B_to + e - sigma(e) is a basis for every e. Computed as a perfect matching
// of the exchange graph by augmenting paths, trying domain and partner ids
// in ascending order. Throws InputError when either set is not a basis.
ExchangeMap ExchangeBijection(ExtendedMatroid& m, const ElementSet& from,
                              const ElementSet& to);

// Injection sigma from `domain` (independent, disjoint from `to`) into the
// basis `to` such that to + e - sigma(e) is independent for every e. Same
// matching procedure as ExchangeBijection. Throws std::logic_error if no
// saturating matching exists, which the exchange property rules out.
ExchangeMap ExchangeInjection(ExtendedMatroid& m, const ElementSet& domain,
                              const ElementSet& to);

}  // namespace submod

#endif  // SUBMOD_MATROID_H_
