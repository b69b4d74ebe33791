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

#include "submod/matroid.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submod/errors.h"

namespace submod {

UniformMatroid::UniformMatroid(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k > n) throw InputError("uniform matroid rank exceeds ground size");
}

bool UniformMatroid::IsIndependent(std::span<const ElementId> members) const {
  return members.size() <= k_;
}

std::string UniformMatroid::Describe() const {
  return "uniform(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) + ")";
}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> block_of,
                                   std::vector<std::size_t> capacity)
    : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {
  std::vector<std::size_t> block_size(capacity_.size(), 0);
  for (std::size_t b : block_of_) {
    if (b >= capacity_.size()) {
      throw InputError("element assigned to unknown block " +
                       std::to_string(b));
    }
    ++block_size[b];
  }
  for (std::size_t b = 0; b < capacity_.size(); ++b) {
    rank_ += std::min(capacity_[b], block_size[b]);
  }
}

PartitionMatroid PartitionMatroid::Contiguous(std::size_t n,
                                              std::size_t num_blocks,
                                              std::size_t capacity) {
  if (num_blocks == 0 || num_blocks > n) {
    throw InputError("need 1 <= blocks <= n");
  }
  std::vector<std::size_t> block_of(n);
  for (std::size_t e = 0; e < n; ++e) block_of[e] = e * num_blocks / n;
  return PartitionMatroid(std::move(block_of),
                          std::vector<std::size_t>(num_blocks, capacity));
}

bool PartitionMatroid::IsIndependent(std::span<const ElementId> members) const {
  // Small sets: count per block in a local buffer.
  std::vector<std::size_t> used(capacity_.size(), 0);
  for (ElementId e : members) {
    const std::size_t b = block_of_[e];
    if (++used[b] > capacity_[b]) return false;
  }
  return true;
}

std::string PartitionMatroid::Describe() const {
  return "partition(n=" + std::to_string(block_of_.size()) +
         ",blocks=" + std::to_string(capacity_.size()) +
         ",rank=" + std::to_string(rank_) + ")";
}

ExtendedMatroid::ExtendedMatroid(std::shared_ptr<const Matroid> base)
    : base_(std::move(base)) {
  if (!base_) throw InputError("extended matroid needs a base matroid");
}

bool ExtendedMatroid::Independent(const ElementSet& s) {
  if (!s.empty() && s.members().back() >= extended_size()) {
    throw InputError("element id " + std::to_string(s.members().back()) +
                     " outside extended ground set");
  }
  ++independence_calls_;
  if (s.size() > rank()) return false;
  return base_->IsIndependent(s.RealSpan(num_real()));
}

bool ExtendedMatroid::IsBasis(const ElementSet& s) {
  return s.size() == rank() && Independent(s);
}

ElementSet PadWithDummies(const ElementSet& s, std::size_t num_real,
                          std::size_t k) {
  if (s.size() > k) {
    throw InputError("cannot pad a set of size " + std::to_string(s.size()) +
                     " to " + std::to_string(k));
  }
  ElementSet out = s;
  for (std::size_t i = 0; out.size() < k; ++i) {
    if (i >= k) throw InputError("not enough dummy ids to pad set");
    out.insert(static_cast<ElementId>(num_real + i));
  }
  if (s.cached_value()) out.set_cached_value(*s.cached_value());
  return out;
}

ElementSet MaxGainBasis(CountedOracle& oracle, ExtendedMatroid& m,
                        const ElementSet& a, const ElementSet& excluded) {
  const std::size_t n = m.num_real();
  const std::size_t k = m.rank();
  const double a_value = oracle.CachedValue(a);

  struct Item {
    double gain;
    ElementId id;
  };
  std::vector<Item> items;
  items.reserve(n + k);
  for (ElementId x = 0; x < n; ++x) {
    if (a.contains(x) || excluded.contains(x)) continue;
    items.push_back({oracle.Gain(x, a, a_value), x});
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto d = static_cast<ElementId>(n + i);
    if (a.contains(d) || excluded.contains(d)) continue;
    items.push_back({0.0, d});
  }
  std::sort(items.begin(), items.end(), [](const Item& l, const Item& r) {
    if (l.gain != r.gain) return l.gain > r.gain;
    return l.id < r.id;
  });

  ElementSet basis;
  for (const Item& item : items) {
    if (basis.size() == k) break;
    if (m.is_dummy(item.id)) {
      // Dummies never affect independence of the real part.
      basis.insert(item.id);
      continue;
    }
    ElementSet trial = basis.With(item.id);
    if (m.Independent(trial)) basis = std::move(trial);
  }
  return basis;
}

ElementId ExchangeMap::at(ElementId e) const {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), e,
      [](const std::pair<ElementId, ElementId>& p, ElementId v) {
        return p.first < v;
      });
  if (it == pairs.end() || it->first != e) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " not in exchange map domain");
  }
  return it->second;
}

namespace {

// Kuhn's augmenting-path matching of `domain` into `codomain` where (e, y)
// is an edge iff target + e - y is independent. Edges are evaluated lazily.
ExchangeMap MatchExchanges(ExtendedMatroid& m,
                           const std::vector<ElementId>& domain,
                           const std::vector<ElementId>& codomain,
                           const ElementSet& target) {
  const std::size_t dn = domain.size();
  const std::size_t cn = codomain.size();
  std::vector<std::int8_t> edge(dn * cn, -1);
  auto has_edge = [&](std::size_t i, std::size_t j) {
    std::int8_t& e = edge[i * cn + j];
    if (e < 0) {
      ElementSet swapped = target.Without(codomain[j]);
      swapped.insert(domain[i]);
      e = m.Independent(swapped) ? 1 : 0;
    }
    return e == 1;
  };

  std::vector<std::ptrdiff_t> match_of(cn, -1);
  std::vector<char> visited(cn);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < cn; ++j) {
      if (visited[j] || !has_edge(i, j)) continue;
      visited[j] = 1;
      if (match_of[j] < 0 ||
          augment(static_cast<std::size_t>(match_of[j]))) {
        match_of[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < dn; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) {
      throw std::logic_error("exchange graph has no saturating matching");
    }
  }

  ExchangeMap map;
  for (std::size_t j = 0; j < cn; ++j) {
    if (match_of[j] >= 0) {
      map.pairs.emplace_back(domain[static_cast<std::size_t>(match_of[j])],
                             codomain[j]);
    }
  }
  std::sort(map.pairs.begin(), map.pairs.end());
  return map;
}

}  // namespace

ExchangeMap ExchangeBijection(ExtendedMatroid& m, const ElementSet& from,
                              const ElementSet& to) {
  if (!m.IsBasis(from)) {
    throw InputError("exchange source " + from.ToString() + " is not a basis");
  }
  if (!m.IsBasis(to)) {
    throw InputError("exchange target " + to.ToString() + " is not a basis");
  }
  const ElementSet domain = Difference(from, to);
  const ElementSet codomain = Difference(to, from);
  return MatchExchanges(m, domain.members(), codomain.members(), to);
}

ExchangeMap ExchangeInjection(ExtendedMatroid& m, const ElementSet& domain,
                              const ElementSet& to) {
  if (!Intersection(domain, to).empty()) {
    throw InputError("exchange domain must be disjoint from the target");
  }
  return MatchExchanges(m, domain.members(), to.members(), to);
}

}  // namespace submod
