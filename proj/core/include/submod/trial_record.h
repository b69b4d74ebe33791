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

#ifndef SUBMOD_TRIAL_RECORD_H_
#define SUBMOD_TRIAL_RECORD_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace submod {

// One algorithm run.
struct TrialRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
  double eps = 0.0;
  double t = 0.0;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::uint64_t value_queries = 0;
  std::uint64_t independence_calls = 0;
  double wall_ms = 0.0;
  // False when a heuristic pool cap pruned the enumeration tree.
  bool certified = true;
};

}  // namespace submod

#endif  // SUBMOD_TRIAL_RECORD_H_
