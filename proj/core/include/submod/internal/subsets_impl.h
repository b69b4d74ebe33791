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

#ifndef SUBMOD_INTERNAL_SUBSETS_IMPL_H_
#define SUBMOD_INTERNAL_SUBSETS_IMPL_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "submod/element_set.h"

namespace submod {

template <typename Visitor>
void ForEachSubset(std::size_t n, std::size_t max_size, Visitor&& visit) {
  max_size = std::min(max_size, n);
  std::vector<ElementId> combo;
  for (std::size_t r = 0; r <= max_size; ++r) {
    combo.resize(r);
    for (std::size_t i = 0; i < r; ++i) combo[i] = static_cast<ElementId>(i);
    while (true) {
      visit(static_cast<const std::vector<ElementId>&>(combo));
      // Next r-combination in lexicographic order.
      std::size_t i = r;
      while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

}  // namespace submod

#endif  // SUBMOD_INTERNAL_SUBSETS_IMPL_H_
